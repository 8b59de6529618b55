#include "syzmf/disks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

namespace syzmf {

const std::vector<std::string>& p1_labels() {
    static const std::vector<std::string> labels = {"+", "-"};
    return labels;
}

const std::vector<std::string>& p2_labels() {
    static const std::vector<std::string> labels = {"++", "--", "-+", "+-"};
    return labels;
}

std::vector<DiskClass> p1_catalogue() {
    const Rational half(1, 2);
    return {
        {"+", "-", 1, {Rational(0), {Rational(1)}}, +1},
        {"+", "-", 0, {half, {Rational(0)}}, -1},
        {"-", "+", 0, {Rational(0), {Rational(0)}}, +1},
        {"-", "+", -1, {half, {Rational(-1)}}, -1},
    };
}

namespace {

// The path domain is a torus square subdivided into a 3x3 grid of strata
// regions per axis: the two section branches, then the fiber circle.  Anchors
// live on the half-integer grid (Z/6)^2, odd coordinates at region centers
// and even ones on stratum boundaries.  Per axis:
//   1 = '-' branch center, 3 = '+' branch center, 5 = circle midpoint,
//   2 = the origin corner (moment coordinate 0),
//   0 and 4 = the circle base point (moment coordinate t/3, angle 0).
struct Pos {
    int a = 0, b = 0;
    bool operator==(const Pos&) const = default;
};

constexpr int kMod = 6;

int wrap(int v) { return ((v % kMod) + kMod) % kMod; }

bool is_center_coord(int c) { return c == 1 || c == 3; }
bool is_base_coord(int c) { return c == 0 || c == 4; }
bool is_corner(Pos p) { return is_base_coord(p.a) && is_base_coord(p.b); }

int label_sign(char c) { return c == '+' ? 1 : -1; }

Pos label_center(const std::string& label) {
    return Pos{label_sign(label[0]) > 0 ? 3 : 1, label_sign(label[1]) > 0 ? 3 : 1};
}

// Base-boundary transition of a fibration leg (toward or away from t/3).
bool fib_transition(int from, int to) {
    return (from == 1 && to == 0) || (from == 0 && to == 1) || (from == 3 && to == 4) ||
           (from == 4 && to == 3);
}

std::vector<Pos> legal_moves(Pos p) {
    std::vector<Pos> out;
    if (is_center_coord(p.b)) {  // line geometry along the first axis
        out.push_back({wrap(p.a + 1), p.b});
        out.push_back({wrap(p.a - 1), p.b});
    }
    if (is_center_coord(p.a)) {  // line geometry along the second axis
        out.push_back({p.a, wrap(p.b + 1)});
        out.push_back({p.a, wrap(p.b - 1)});
    }
    if (is_base_coord(p.a)) {  // fibration legs over the vertical segment
        for (int nb : {wrap(p.b + 1), wrap(p.b - 1)}) {
            if (fib_transition(p.b, nb)) out.push_back({p.a, nb});
        }
    }
    if (p.a == 5 && p.b == 5) {
        for (int ca : {0, 4})
            for (int cb : {0, 4}) out.push_back({ca, cb});
    } else if (is_corner(p)) {
        out.push_back({5, 5});
    }
    return out;
}

enum class StepKind { Line1, Line2, Fib, Diag };

StepKind step_kind(Pos from, Pos to) {
    if (from.b == to.b) return StepKind::Line1;
    if (from.a == to.a) return is_center_coord(from.a) ? StepKind::Line2 : StepKind::Fib;
    return StepKind::Diag;
}

enum class PatternKind { D1, ZeroOrigin, D4, ZeroBase, D4OutPlus, D4OutMinus };

struct Pattern {
    PatternKind kind;
    int axis;  // 0 = first coordinate, 1 = second
};

char coord_symbol(int c) {
    switch (c) {
        case 1: return '-';
        case 3: return '+';
        case 2: return 'O';
        case 5: return 'C';
        default: return 'B';  // 0 and 4 descend to the same base point
    }
}

// Itinerary of one axis: boundary-glued symbol string plus whether the walk
// was rejoined across the base identification.
struct Itinerary {
    std::string symbols;
    int last_coord = -1;
    bool junction = false;
    bool broken = false;

    void extend(int from, int to) {
        if (symbols.empty()) {
            symbols.push_back(coord_symbol(from));
        } else if (last_coord != from) {
            if (is_base_coord(last_coord) && is_base_coord(from)) {
                junction = true;  // rejoined across the identified base points 0 == 4
            } else {
                broken = true;
                return;
            }
        }
        symbols.push_back(coord_symbol(to));
        last_coord = to;
    }
};

std::optional<Pattern> match_pattern(const Itinerary& h, const Itinerary& v, bool excursion) {
    if (h.broken || v.broken) return std::nullopt;
    const bool h_active = !h.symbols.empty(), v_active = !v.symbols.empty();
    if (h_active == v_active) return std::nullopt;  // exactly one line component
    const Itinerary& it = h_active ? h : v;
    const int axis = h_active ? 0 : 1;
    // A base junction occurs exactly when the fibration/Maslov excursion
    // interrupts the walk, and those legs are horizontal-only geometry.
    if (it.junction != excursion) return std::nullopt;
    if (excursion && axis != 0) return std::nullopt;

    if (!it.junction) {
        if (it.symbols == "-O+") return Pattern{PatternKind::D1, axis};
        if (it.symbols == "+O-") return Pattern{PatternKind::ZeroOrigin, axis};
        if (it.symbols == "+BCB-") return Pattern{PatternKind::D4, axis};
    } else {
        if (it.symbols == "-B+") return Pattern{PatternKind::ZeroBase, axis};
        if (it.symbols == "+BCB+") return Pattern{PatternKind::D4OutPlus, axis};
        if (it.symbols == "-BCB-") return Pattern{PatternKind::D4OutMinus, axis};
    }
    return std::nullopt;
}

struct GammaMinus {
    bool segment = false;  // otherwise an oriented constant path
    std::array<int, 2> dir{0, 0};
};

std::vector<GammaMinus> gamma_minus_candidates() {
    std::vector<GammaMinus> out;
    for (bool segment : {false, true}) {
        for (auto dir : {std::array<int, 2>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            out.push_back({segment, dir});
        }
    }
    return out;
}

// Hand-assigned orientation signs keyed by (p, q, v).
int pair_sign(const std::string& p, const std::string& q, const std::vector<int>& v) {
    static const std::map<std::string, int> table = {
        {"++,-+|1,0", +1},  {"++,-+|0,0", -1},  {"+-,--|1,0", +1},  {"+-,--|0,0", -1},
        {"++,+-|0,1", +1},  {"++,+-|-1,0", -1}, {"-+,--|0,1", -1},  {"-+,--|-1,0", +1},
        {"-+,++|0,0", +1},  {"-+,++|-1,0", -1}, {"--,+-|0,0", +1},  {"--,+-|-1,0", -1},
        {"+-,++|0,0", +1},  {"+-,++|0,-1", -1}, {"--,-+|0,0", -1},  {"--,-+|0,-1", +1},
    };
    const std::string key =
        p + "," + q + "|" + std::to_string(v[0]) + "," + std::to_string(v[1]);
    const auto it = table.find(key);
    if (it == table.end()) {
        throw std::logic_error("enumerator produced a pair outside the sign convention: " + key);
    }
    return it->second;
}

// The Maslov excursion crosses the base-corner identification; the admitted
// corner transitions are the ones consistent with traversing the boundary of
// the disk through the line at infinity (first coordinate always passes from
// the far side of the identification to the near one, the second never moves
// from the near side to the far one).
bool excursion_allowed(Pos c1, Pos c2) {
    if (!(c1.a == 0 && c2.a == 4)) return false;
    return !(c1.b == 4 && c2.b == 0);
}

class Enumerator {
  public:
    Enumerator(std::string p, std::string q) : p_(std::move(p)), q_(std::move(q)) {
        delta_ = {(label_sign(q_[0]) - label_sign(p_[0])) / 2,
                  (label_sign(q_[1]) - label_sign(p_[1])) / 2};
    }

    std::vector<PermissiblePair> run() {
        std::vector<Pos> path{label_center(q_)};
        std::array<std::array<bool, kMod>, kMod> visited{};
        visited[path[0].a][path[0].b] = true;
        dfs(path, visited);
        std::sort(results_.begin(), results_.end(),
                  [](const PermissiblePair& x, const PermissiblePair& y) { return x.v < y.v; });
        return std::move(results_);
    }

  private:
    void dfs(std::vector<Pos>& path, std::array<std::array<bool, kMod>, kMod>& visited) {
        const Pos cur = path.back();
        if (path.size() > 1 && cur == label_center(p_)) {
            classify(path);
            return;
        }
        if (path.size() > kMaxHops) return;
        for (Pos nxt : legal_moves(cur)) {
            if (visited[nxt.a][nxt.b]) continue;
            visited[nxt.a][nxt.b] = true;
            path.push_back(nxt);
            dfs(path, visited);
            path.pop_back();
            visited[nxt.a][nxt.b] = false;
        }
    }

    void classify(const std::vector<Pos>& path) {
        // Excursion structure: at most one block FIB, DIAG, DIAG, FIB with an
        // admitted corner transition; no stray fibration or diagonal steps.
        std::vector<StepKind> kinds(path.size() - 1);
        std::vector<int> diag_steps, fib_steps;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            kinds[i] = step_kind(path[i], path[i + 1]);
            if (kinds[i] == StepKind::Diag) diag_steps.push_back(static_cast<int>(i));
            if (kinds[i] == StepKind::Fib) fib_steps.push_back(static_cast<int>(i));
        }
        const bool excursion = !diag_steps.empty();
        if (excursion) {
            if (diag_steps.size() != 2 || diag_steps[1] != diag_steps[0] + 1) return;
            const int k = diag_steps[0];
            if (fib_steps.size() != 2 || fib_steps[0] != k - 1 || fib_steps[1] != k + 2) return;
            if (!excursion_allowed(path[k], path[k + 2])) return;
        } else if (!fib_steps.empty()) {
            return;
        }

        Itinerary horizontal, vertical;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (kinds[i] == StepKind::Line1) horizontal.extend(path[i].a, path[i + 1].a);
            if (kinds[i] == StepKind::Line2) vertical.extend(path[i].b, path[i + 1].b);
        }
        const auto pattern = match_pattern(horizontal, vertical, excursion);
        if (!pattern) return;

        for (const GammaMinus& gm : gamma_minus_candidates()) {
            if (!compatible(gm)) continue;
            if (!pattern_accepts(*pattern, gm)) continue;
            emit(*pattern, gm, excursion);
        }
    }

    // Fiber-path compatibility with the resolved relative positions of the
    // intersection points: constants point from p toward q; a segment along
    // the displacement axis runs against it.
    bool compatible(const GammaMinus& gm) const {
        if (!gm.segment) return gm.dir[0] == delta_[0] && gm.dir[1] == delta_[1];
        for (int axis = 0; axis < 2; ++axis) {
            if (gm.dir[axis] != 0 && delta_[axis] != 0 && gm.dir[axis] != -delta_[axis]) {
                return false;
            }
        }
        return true;
    }

    static bool pattern_accepts(const Pattern& pattern, const GammaMinus& gm) {
        const int axis = pattern.axis;
        switch (pattern.kind) {
            case PatternKind::D1:
                return gm.segment && gm.dir[axis] == 1 && gm.dir[1 - axis] == 0;
            case PatternKind::D4:
            case PatternKind::D4OutPlus:
            case PatternKind::D4OutMinus:
                return gm.segment && gm.dir[axis] == -1 && gm.dir[1 - axis] == 0;
            case PatternKind::ZeroOrigin:
            case PatternKind::ZeroBase:
                return !gm.segment;
        }
        return false;
    }

    void emit(const Pattern& pattern, const GammaMinus& gm, bool excursion) {
        const Rational third(1, 3);
        PermissiblePair pair;
        pair.p = p_;
        pair.q = q_;
        pair.v = gm.segment ? std::vector<int>{gm.dir[0], gm.dir[1]} : std::vector<int>{0, 0};

        AffineArea area{Rational(0), {Rational(0), Rational(0)}};
        std::string line_tag = pattern.axis == 0 ? "line-H" : "line-V";
        switch (pattern.kind) {
            case PatternKind::D1:
                area.x_coeff[pattern.axis] = 1;
                break;
            case PatternKind::ZeroOrigin:
                break;
            case PatternKind::D4:
            case PatternKind::D4OutPlus:
            case PatternKind::D4OutMinus:
                area.t_coeff = third;
                area.x_coeff[pattern.axis] = -1;
                break;
            case PatternKind::ZeroBase:
                line_tag = "zero-area";
                break;
        }
        if (excursion) {
            area.t_coeff += third;
            pair.components = {line_tag, "fibration-zero-area", "maslov-two-infinity"};
        } else {
            pair.components = {line_tag};
        }
        pair.area = std::move(area);
        pair.sign = pair_sign(p_, q_, pair.v);
        results_.push_back(std::move(pair));
    }

    static constexpr std::size_t kMaxHops = 8;

    std::string p_, q_;
    std::array<int, 2> delta_{0, 0};
    std::vector<PermissiblePair> results_;
};

}  // namespace

std::vector<PermissiblePair> p2_enumerate(const std::string& p, const std::string& q) {
    const auto& labels = p2_labels();
    if (std::find(labels.begin(), labels.end(), p) == labels.end() ||
        std::find(labels.begin(), labels.end(), q) == labels.end()) {
        throw std::invalid_argument("unknown intersection point label");
    }
    if (p == q) return {};
    return Enumerator(p, q).run();
}

std::vector<PermissiblePair> p2_enumerate_all() {
    std::vector<PermissiblePair> out;
    for (const auto& p : p2_labels()) {
        for (const auto& q : p2_labels()) {
            auto pairs = p2_enumerate(p, q);
            out.insert(out.end(), std::make_move_iterator(pairs.begin()),
                       std::make_move_iterator(pairs.end()));
        }
    }
    return out;
}

PsiMatrix psi_matrix_p1() {
    PsiMatrix psi;
    psi.labels = p1_labels();
    psi.n = 1;
    psi.u_frac = Rational(1, 2);
    psi.entries.assign(2, std::vector<FiberwiseEntry>(2));
    const auto index = [](const std::string& label) { return label == "+" ? 0 : 1; };
    for (const auto& disk : p1_catalogue()) {
        psi.entries[index(disk.p)][index(disk.q)].add(
            FourierTerm{Rational(disk.sign), {disk.v}, disk.area});
    }
    return psi;
}

PsiMatrix psi_matrix_p2() {
    PsiMatrix psi;
    psi.labels = p2_labels();
    psi.n = 2;
    psi.u_frac = Rational(1, 3);
    psi.entries.assign(4, std::vector<FiberwiseEntry>(4));
    const auto index = [](const std::string& label) {
        const auto& labels = p2_labels();
        return std::distance(labels.begin(), std::find(labels.begin(), labels.end(), label));
    };
    for (const auto& pair : p2_enumerate_all()) {
        psi.entries[index(pair.p)][index(pair.q)].add(
            FourierTerm{Rational(pair.sign), pair.v, pair.area});
    }
    return psi;
}

}  // namespace syzmf
