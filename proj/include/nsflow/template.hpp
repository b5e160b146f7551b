#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nsflow {

struct Diagnostic;  // graph.hpp

enum class ChartKind { joining, splitting };

// Port vocabulary: joining charts expose {in1, in2, out}, splitting charts
// expose {in, out1, out2}.
enum class Port { in1, in2, in, out, out1, out2 };

bool is_in_port(Port p);
bool port_valid_for(ChartKind kind, Port p);
const char* port_name(Port p);
Port port_from_name(const std::string& name);  // throws on unknown name

struct Chart {
    std::string id;
    ChartKind kind;
    bool operator==(const Chart&) const = default;
};

struct PortRef {
    std::string chart;
    Port port;
    bool operator==(const PortRef&) const = default;
};

struct Strip {
    PortRef from;  // an out-port
    PortRef to;    // an in-port
    int twist;     // 0 or 1; 1 glues the cross-section rotated by a half turn
    bool operator==(const Strip&) const = default;
};

/// A template given combinatorially: branch charts plus the banding pattern
/// of the connecting strips. No embedding data is kept.
struct Template {
    std::vector<Chart> charts;
    std::vector<Strip> strips;
    bool operator==(const Template&) const = default;
};

/// Empty iff every out-port feeds exactly one strip, every in-port receives
/// exactly one, ports match chart kinds, twists are 0/1, and the chart/strip
/// graph is connected.
std::vector<Diagnostic> validate_template(const Template& t);

/// The Lorenz template: one joining chart J, one splitting chart S, strips
/// J.out->S.in, S.out1->J.in1, S.out2->J.in2, all untwisted.
Template build_lorenz();

/// One piece of the boundary of the thickened template: a component of the
/// entrance set X or the exit set Y.
struct SurfaceComponent {
    bool entrance = true;        // false: exit
    long long euler_char = 0;    // of the compact surface with boundary
    int boundary_circles = 0;    // dividing curves along its boundary
    int capped_genus = 0;        // genus after capping each circle with a disc
};

/// A connected component of the closed surface bounding the thickened
/// template.
struct ClosedComponent {
    long long euler_char = 0;
    int genus = 0;
};

struct BoundaryReport {
    std::vector<SurfaceComponent> entrance;
    std::vector<SurfaceComponent> exit;
    std::vector<ClosedComponent> closed;
    int dividing_curves = 0;
    // entrance_component[c] / exit_component[c]: which component curve c runs
    // along, as indices into the two lists above.
    std::vector<int> curve_entrance_component;
    std::vector<int> curve_exit_component;
    int s0 = 0, s1 = 0;  // entrance components with capped genus > 1 / == 0
    int t0 = 0, t1 = 0;  // exit-side mirror
    long long total_boundary_euler = 0;
};

/// Traces the boundary of the thickened template: builds the cell complex of
/// the boundary surface from per-chart face inventories, glues port cells
/// through the strips (honoring twist parity), and classifies it into
/// entrance/exit components separated by the dividing curves.
///
/// Throws std::invalid_argument if validate_template(t) is nonempty and
/// std::logic_error if the glued complex is not an orientable surface or a
/// component has odd Euler characteristic (cannot happen for valid input).
BoundaryReport thicken_boundary(const Template& t);

/// max( sum of entrance capped genera exceeding 1 minus their count,
///      exit-side analogue ); empty sums give 0.
int template_genus(const BoundaryReport& report);

/// Entrance/exit Euler identity: sum of capped entrance genera over
/// components of genus > 1, minus s0, minus s1, equals the exit-side value.
bool check_lemma41(const BoundaryReport& report);

/// Yields all closed connected templates with #joining = #splitting charts up
/// to max_charts/2 of each: every strip matching up to chart relabeling,
/// crossed with every twist assignment. Strips from a chart to itself are not
/// generated. Deterministic order; max_charts must be <= 8.
void enumerate_small_templates(int max_charts,
                               const std::function<void(const Template&)>& yield);

/// Convenience form that materializes the stream (small max_charts only).
std::vector<Template> enumerate_small_templates(int max_charts);

}  // namespace nsflow
