#include "qsl/classify.hpp"

namespace qsl {

namespace {

Condition eq(const char* c) { return {c, Pred::EQ0}; }
Condition ne(const char* c) { return {c, Pred::NE0}; }
Condition gt(const char* c) { return {c, Pred::GT0}; }
Condition lt(const char* c) { return {c, Pred::LT0}; }

std::vector<TableRow> build_rows() {
    std::vector<TableRow> rows;
    auto six = [&](int k, std::vector<Condition> conds) {
        // the six-line class requires B3 = 0 and N = 0 throughout
        std::vector<Condition> all{eq("B3"), eq("N")};
        all.insert(all.end(), conds.begin(), conds.end());
        rows.push_back({ConfigLabel::six(k), std::move(all)});
    };
    auto five = [&](int k, std::vector<Condition> conds) {
        rows.push_back({ConfigLabel::five(k), std::move(conds)});
    };

    six(1, {gt("eta"), gt("H1")});
    six(2, {gt("eta"), lt("H1")});
    six(3, {lt("eta"), lt("H1")});
    six(4, {lt("eta"), gt("H1")});
    six(5, {gt("eta"), eq("H1")});
    six(6, {lt("eta"), eq("H1")});
    six(7, {ne("M"), ne("D"), eq("eta"), eq("H"), eq("N1"), eq("N2")});
    six(8, {ne("M"), ne("H"), eq("eta"), eq("H2"), gt("H3")});
    six(9, {ne("M"), ne("H"), eq("eta"), eq("H2"), lt("H3")});
    six(10, {ne("M"), eq("eta"), eq("H"), eq("D"), eq("N1"), eq("N2")});
    six(11, {eq("eta"), eq("M"), eq("N3"), eq("N4")});

    five(1, {gt("eta"), eq("B3"), eq("theta"), ne("N"), ne("mu"), ne("H1")});
    five(2, {lt("eta"), eq("B3"), eq("theta"), ne("N"), ne("mu"), ne("H1")});
    five(3, {gt("eta"), eq("B2"), eq("N"), ne("B3"), gt("H1"), eq("H4"), gt("H5")});
    five(4, {gt("eta"), eq("B2"), eq("N"), ne("B3"), eq("H4"), lt("H5")});
    five(5, {gt("eta"), eq("B2"), eq("N"), ne("B3"), lt("H1"), eq("H4"), gt("H5")});
    five(6, {lt("eta"), ne("B3"), eq("B2"), eq("N")});
    five(7, {gt("eta"), eq("B3"), eq("theta"), ne("N"), eq("mu"), eq("H6")});
    five(8, {gt("eta"), eq("B3"), eq("theta"), ne("N"), ne("mu"), eq("H1")});
    five(9, {lt("eta"), eq("B3"), eq("theta"), ne("N"), eq("mu"), eq("H6")});
    five(10, {lt("eta"), eq("B3"), eq("theta"), ne("N"), ne("mu"), eq("H1")});
    five(11, {eq("eta"), ne("M"), eq("B3"), eq("theta"), ne("mu"), ne("N"), ne("D")});
    five(12, {gt("eta"), eq("B2"), eq("N"), ne("B3"), gt("H1"), eq("H4"), eq("H5")});
    five(13, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("N1"), ne("N2"), ne("D"),
              gt("N5")});
    five(14, {eq("eta"), ne("M"), eq("B3"), eq("theta"), ne("N"), ne("K"), eq("mu"), eq("H6")});
    five(15, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("N1"), ne("N2"), ne("D"),
              lt("N5")});
    five(16, {gt("eta"), eq("B2"), eq("N"), ne("B3"), lt("H1"), eq("H4"), eq("H5")});
    five(17, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("N1"), eq("N5"), ne("N2"),
              ne("D")});
    five(18, {eq("eta"), ne("M"), eq("B3"), eq("theta"), ne("N"), eq("mu"), eq("K"), eq("H6")});
    five(19, {eq("eta"), ne("M"), eq("B3"), eq("theta"), ne("mu"), ne("N"), eq("D")});
    five(20, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("D"), eq("N1"), ne("N2"),
              gt("N5")});
    five(21, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("N2"), ne("D"), ne("N1")});
    five(22, {eq("eta"), ne("M"), eq("B2"), eq("N"), ne("B3"), eq("H2"), gt("H3")});
    five(23, {eq("eta"), eq("M"), ne("N"), eq("B3"), eq("theta"), eq("N6")});
    five(24, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("D"), eq("N1"), ne("N2"),
              lt("N5")});
    five(25, {eq("eta"), ne("M"), eq("B2"), eq("N"), ne("B3"), eq("H2"), lt("H3")});
    five(26, {eq("eta"), eq("M"), ne("N3"), eq("B3"), eq("N"), eq("D1")});
    five(27, {eq("eta"), eq("M"), ne("N4"), eq("B3"), eq("N"), eq("N3"), ne("D1")});
    five(28, {eq("eta"), ne("M"), eq("B3"), eq("N"), eq("H"), eq("D"), eq("N2"), ne("N1")});
    five(29, {eq("eta"), ne("M"), eq("B2"), eq("N"), ne("B3"), eq("H2"), eq("H3")});
    five(30, {eq("eta"), eq("M"), ne("N4"), eq("B3"), eq("N"), eq("N3"), eq("D1")});
    return rows;
}

// build a system from the printed coefficients (the xy entries are the
// printed ones; storage halves them)
QuadraticSystem from_printed(Rational a00, Rational a10, Rational a01, Rational a20,
                             Rational axy, Rational a02, Rational b00, Rational b10,
                             Rational b01, Rational b20, Rational bxy, Rational b02) {
    return {a00, a10, a01, a20, axy / 2, a02, b00, b10, b01, b20, bxy / 2, b02};
}

Rational P(const std::map<std::string, Rational>& m, const char* n) {
    auto it = m.find(n);
    if (it == m.end()) throw Error(std::string("missing parameter ") + n);
    return it->second;
}

std::vector<Rational> default_grid(const std::function<bool(const Rational&)>& ok) {
    std::vector<Rational> g;
    for (auto v : {rat(-3), rat(-2), rat(-1, 2), rat(1, 2), rat(2), rat(3),
                   rat(-1), rat(1), rat(5, 3), rat(-5, 2)})
        if (ok(v) && g.size() < 6) g.push_back(v);
    return g;
}

std::map<ConfigLabel, Representative> build_reps() {
    std::map<ConfigLabel, Representative> reps;
    auto fixed = [&](ConfigLabel L, QuadraticSystem s) {
        Representative r;
        r.legal = [](const std::map<std::string, Rational>&) { return true; };
        r.build = [s](const std::map<std::string, Rational>&) { return s; };
        reps.emplace(L, std::move(r));
    };
    auto with_g = [&](ConfigLabel L, const char* constraint,
                      std::function<bool(const Rational&)> ok,
                      std::function<QuadraticSystem(const Rational&)> mk,
                      std::vector<Rational> grid = {}) {
        Representative r;
        r.params = {"g"};
        r.constraint_text = constraint;
        r.legal = [ok](const std::map<std::string, Rational>& m) { return ok(P(m, "g")); };
        r.build = [mk, ok, constraint](const std::map<std::string, Rational>& m) {
            Rational g = P(m, "g");
            if (!ok(g)) throw Error("parameter violates constraint " + std::string(constraint));
            return mk(g);
        };
        r.sample_grid = {grid.empty() ? default_grid(ok) : grid};
        reps.emplace(L, std::move(r));
    };
    Rational O(0), I(1);

    fixed(ConfigLabel::six(1), from_printed(-1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 1));
    fixed(ConfigLabel::six(2), from_printed(1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1));
    fixed(ConfigLabel::six(3), from_printed(0, 0, 0, 0, 2, 0, -1, 0, 0, -1, 0, 1));
    fixed(ConfigLabel::six(4), from_printed(0, 0, 0, 0, 2, 0, 1, 0, 0, -1, 0, 1));
    fixed(ConfigLabel::six(5), from_printed(0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1));
    fixed(ConfigLabel::six(6), from_printed(0, 0, 0, 0, 2, 0, 0, 0, 0, -1, 0, 1));
    fixed(ConfigLabel::six(7), from_printed(-1, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0));
    fixed(ConfigLabel::six(8), from_printed(1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -2, 0));
    fixed(ConfigLabel::six(9), from_printed(-1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -2, 0));
    fixed(ConfigLabel::six(10), from_printed(0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0));
    fixed(ConfigLabel::six(11), from_printed(0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0));

    auto nz = [](const Rational& g) { return g != 0; };
    auto nz_pm1 = [](const Rational& g) { return g != 0 && g != 1 && g != -1; };

    with_g(ConfigLabel::five(1), "g(g^2-1) != 0", nz_pm1, [](const Rational& g) {
        return from_printed(1, g + 1, 0, g, 0, 0, 0, 0, 0, 0, g - 1, 1);
    });
    with_g(ConfigLabel::five(2), "g != 0", nz, [](const Rational& g) {
        return from_printed(-4 * g, 0, 0, g, 0, 0, g * g - 4, g * g + 4, 0, -1, g, -1);
    });
    with_g(ConfigLabel::five(3), "g != 0", nz, [](const Rational& g) {
        return from_printed(-1, 0, 0, 1, 0, 0, -g, 0, 0, 0, 0, g);
    });
    with_g(ConfigLabel::five(4), "g != 0", nz, [](const Rational& g) {
        return from_printed(-1, 0, 0, 1, 0, 0, g, 0, 0, 0, 0, g);
    });
    with_g(ConfigLabel::five(5), "g != 0", nz, [](const Rational& g) {
        return from_printed(1, 0, 0, 1, 0, 0, g, 0, 0, 0, 0, g);
    });
    with_g(ConfigLabel::five(6), "", [](const Rational&) { return true; },
           [](const Rational& g) {
               return from_printed(1, 0, 0, 0, 2, 0, g, 0, 0, -1, 0, 1);
           });
    fixed(ConfigLabel::five(7), from_printed(1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1));
    with_g(ConfigLabel::five(8), "g(g^2-1) != 0", nz_pm1, [](const Rational& g) {
        return from_printed(0, 0, 0, g, 0, 0, 0, 0, 0, 0, g - 1, 1);
    });
    fixed(ConfigLabel::five(9), from_printed(0, 2, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1));
    with_g(ConfigLabel::five(10), "g != 0", nz, [](const Rational& g) {
        return from_printed(0, 0, 0, g, 0, 0, 0, 0, 0, -1, g, -1);
    });
    fixed(ConfigLabel::five(11), from_printed(0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1));
    fixed(ConfigLabel::five(12), from_printed(-1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1));
    with_g(ConfigLabel::five(13), "g(g^2-1) != 0", nz_pm1, [](const Rational& g) {
        return from_printed(-g, 0, 0, g, 0, 0, 0, 0, 2, 0, 0, 0);
    });
    with_g(ConfigLabel::five(14), "g(g^2-1) != 0", nz_pm1, [](const Rational& g) {
        return from_printed(1, g + 1, 0, g, 0, 0, 0, 0, 0, 0, g - 1, 0);
    });
    with_g(ConfigLabel::five(15), "g != 0", nz, [](const Rational& g) {
        return from_printed(g, 0, 0, g, 0, 0, 0, 0, 2, 0, 0, 0);
    });
    fixed(ConfigLabel::five(16), from_printed(1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1));
    fixed(ConfigLabel::five(17), from_printed(0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0));
    fixed(ConfigLabel::five(18), from_printed(1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0));
    fixed(ConfigLabel::five(19), from_printed(0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1));
    fixed(ConfigLabel::five(20), from_printed(-1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0));
    fixed(ConfigLabel::five(21), from_printed(-1, 0, 0, 1, 0, 0, 0, 1, 2, 0, 0, 0));
    fixed(ConfigLabel::five(22), from_printed(1, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, 0));
    fixed(ConfigLabel::five(23), from_printed(-1, 0, 0, 1, 0, 0, -3, 0, 1, -1, 1, 0));
    fixed(ConfigLabel::five(24), from_printed(1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0));
    fixed(ConfigLabel::five(25), from_printed(-1, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, 0));
    with_g(ConfigLabel::five(26), "g in {0,1}",
           [](const Rational& g) { return g == 0 || g == 1; },
           [](const Rational& g) {
               return from_printed(g, -1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0);
           },
           {O, I});
    fixed(ConfigLabel::five(27), from_printed(1, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0));
    fixed(ConfigLabel::five(28), from_printed(0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0));
    fixed(ConfigLabel::five(29), from_printed(0, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, 0));
    with_g(ConfigLabel::five(30), "g in {-1,0,1}",
           [](const Rational& g) { return g == -1 || g == 0 || g == 1; },
           [](const Rational& g) {
               return from_printed(1, 0, 0, 0, 0, 0, g, 0, 0, -1, 0, 0);
           },
           {rat(-1), O, I});
    return reps;
}

} // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = build_rows();
    return rows;
}

const std::map<ConfigLabel, Representative>& representatives() {
    static const std::map<ConfigLabel, Representative> reps = build_reps();
    return reps;
}

QuadraticSystem representative(const ConfigLabel& label,
                               const std::map<std::string, Rational>& params) {
    auto it = representatives().find(label);
    if (it == representatives().end())
        throw Error("no orbit representative for " + label.str());
    return it->second.build(params);
}

} // namespace qsl
