#include "bmeas/verify.hpp"

#include <stdexcept>

namespace bmeas {

namespace {

constexpr double kGridTol = 1e-10;
constexpr double kReciprocalTol = 1e-8;
constexpr int kReciprocalTerms = 30;

struct NamedPoint {
    Complex p;
    Complex omega;
};

// Extra points from the identity documentation, exercising parameters far
// outside (0,1) where the mapped arguments p/(2p-1), p^2/(2p-1) move around
// the plane.
const NamedPoint kSplitExtra[] = {{{1.0 / 3.0, 0.0}, {1.0, 0.0}}, {{0.9, 0.0}, {2.0, 0.0}}, {{3.0, 0.0}, {1.0, 0.0}}};
const NamedPoint kRemark1Extra[] = {{{5.0, 0.0}, {1.0, 0.0}}, {{10.0, 0.0}, {0.5, 0.0}}, {{1.0 / 3.0, 0.0}, {2.0, 0.0}}};
const NamedPoint kReciprocalPoints[] = {{{0.5, 0.0}, {0.5, 0.0}}, {{0.3, 0.0}, {0.7, 0.0}}, {{1.0, 1.0}, {1.0, -1.0}}};

bool is_half(const Complex& p) { return p == Complex(0.5, 0.0); }

void append(SuiteReport& rep, ResidualRow row) {
    row.pass = row.residual < row.tolerance;
    if (!row.pass) rep.all_pass = false;
    if (row.residual > rep.max_residual) rep.max_residual = row.residual;
    rep.rows.push_back(std::move(row));
}

void run_functional(SuiteReport& rep, const EvalConfig& cfg) {
    for (const auto& p : default_grid_p())
        for (const auto& w : default_grid_omega())
            append(rep, {"functional", p, w, 0, residual_functional({p, w}, cfg), kGridTol, false});
}

void run_symmetry(SuiteReport& rep, const EvalConfig& cfg) {
    for (const auto& p : default_grid_p())
        for (const auto& w : default_grid_omega())
            append(rep, {"symmetry", p, w, 0, residual_symmetry({p, w}, cfg), kGridTol, false});
}

void run_reciprocal(SuiteReport& rep, const EvalConfig& cfg) {
    for (const auto& pt : kReciprocalPoints)
        append(rep, {"reciprocal", pt.p, pt.omega, kReciprocalTerms,
                     residual_reciprocal(pt.p, pt.omega, kReciprocalTerms, cfg), kReciprocalTol, false});
}

void run_split(SuiteReport& rep, const EvalConfig& cfg) {
    for (const auto& p : default_grid_p()) {
        if (is_half(p)) continue;
        for (const auto& w : default_grid_omega())
            append(rep, {"split", p, w, 0, residual_param_split(p, w, cfg), kGridTol, false});
    }
    for (const auto& pt : kSplitExtra)
        append(rep, {"split", pt.p, pt.omega, 0, residual_param_split(pt.p, pt.omega, cfg), kGridTol, false});
}

void run_remark1(SuiteReport& rep, const EvalConfig& cfg) {
    for (const auto& p : default_grid_p()) {
        if (is_half(p)) continue;
        for (const auto& w : default_grid_omega())
            append(rep, {"remark1", p, w, 0, residual_remark1(p, w, cfg), kGridTol, false});
    }
    for (const auto& pt : kRemark1Extra)
        append(rep, {"remark1", pt.p, pt.omega, 0, residual_remark1(pt.p, pt.omega, cfg), kGridTol, false});
}

}  // namespace

const std::vector<std::string>& identity_suite_names() {
    static const std::vector<std::string> names = {"functional", "symmetry", "reciprocal", "split", "remark1"};
    return names;
}

const std::vector<Complex>& default_grid_p() {
    static const std::vector<Complex> grid = [] {
        std::vector<Complex> g;
        for (int i = 1; i <= 9; ++i) g.emplace_back(i / 10.0, 0.0);
        g.emplace_back(1.0, 0.5);
        g.emplace_back(1.0, -0.5);
        return g;
    }();
    return grid;
}

const std::vector<Complex>& default_grid_omega() {
    static const std::vector<Complex> grid = {{1.0, 0.0}, {-1.0, 0.0}, {4.0, 0.0}, {-4.0, 0.0}, {0.0, 2.0}, {3.0, 2.0}};
    return grid;
}

SuiteReport run_identity_suite(const std::string& which, const EvalConfig& cfg) {
    const bool all = which == "all";
    bool known = false;
    for (const auto& name : identity_suite_names()) known = known || name == which;
    if (!all && !known) throw std::invalid_argument("unknown identity suite '" + which + "'");
    SuiteReport rep;
    if (all || which == "functional") run_functional(rep, cfg);
    if (all || which == "symmetry") run_symmetry(rep, cfg);
    if (all || which == "reciprocal") run_reciprocal(rep, cfg);
    if (all || which == "split") run_split(rep, cfg);
    if (all || which == "remark1") run_remark1(rep, cfg);
    return rep;
}

}  // namespace bmeas
