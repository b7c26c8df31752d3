#include "nonassoc/catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "nonassoc/io.hpp"

namespace nonassoc {

namespace {

// term-list value algebra for building identities compositionally
using TP = std::vector<std::pair<Rat, TreePtr>>;

TP v(int i) { return {{Rat(1), leaf(i)}}; }

TP mul2(int op, const TP& a, const TP& b) {
    TP out;
    for (const auto& [ca, ta] : a)
        for (const auto& [cb, tb] : b) out.emplace_back(ca * cb, node(op, ta, tb));
    return out;
}

TP operator+(TP a, const TP& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

TP operator-(TP a, const TP& b) {
    for (const auto& [c, t] : b) a.emplace_back(-c, t);
    return a;
}

Polynomial finish(const OpAlphabet& alpha, const TP& terms) {
    RawPoly raw{alpha, terms};
    return to_polynomial(raw);
}

Polynomial from_expr(const OpAlphabet& alpha, const std::string& expr) {
    return to_polynomial(parse_poly_expr(expr, alpha));
}

IdentitySystem make_system(const std::string& name, const OpAlphabet& alpha,
                           std::vector<Polynomial> ids) {
    return IdentitySystem{name, alpha, std::move(ids)};
}

ExpansionRule make_rule(const std::string& name, const OpAlphabet& src, const OpAlphabet& tgt,
                        const std::vector<std::string>& images) {
    ExpansionRule r;
    r.name = name;
    r.source = src;
    r.target = tgt;
    for (const auto& e : images) {
        RawPoly raw = parse_poly_expr(e, tgt, /*slots=*/true);
        r.images.push_back(to_polynomial(raw));
    }
    r.validate();
    return r;
}

std::vector<CatalogEntry> build_systems() {
    std::vector<CatalogEntry> out;
    const OpAlphabet M({"mul"});
    const OpAlphabet B({"br"});
    const OpAlphabet D({"prec", "succ"});
    const OpAlphabet Q({"nw", "ne", "sw", "se"});
    const OpAlphabet T({"tl", "tr"});

    // ---- one product ----------------------------------------------------

    out.push_back({"associative",
                   make_system("associative", M,
                               {from_expr(M, "mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3))")}),
                   "associativity (x,y,z) = 0",
                   {}});

    {
        auto assoc = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(0, mul2(0, a, b), c) - mul2(0, a, mul2(0, b, c));
        };
        TP x = v(1), y = v(2), z = v(3);
        out.push_back({"alternative",
                       make_system("alternative", M,
                                   {finish(M, assoc(x, y, z) + assoc(y, x, z)),
                                    finish(M, assoc(x, y, z) + assoc(x, z, y))}),
                       "left/right alternativity, polarized: (x,y,z)+(y,x,z)=0 and "
                       "(x,y,z)+(x,z,y)=0",
                       {}});

        out.push_back({"pre-lie",
                       make_system("pre-lie", M, {finish(M, assoc(x, y, z) - assoc(y, x, z))}),
                       "left-symmetric identity PL(x,y,z) = (x,y,z) - (y,x,z) = 0",
                       {}});
    }

    out.push_back(
        {"pre-malcev",
         make_system("pre-malcev", M,
                     {from_expr(M,
                                "mul(mul(x2,x3),mul(x1,x4)) - mul(mul(x3,x2),mul(x1,x4))"
                                " + mul(mul(mul(x1,x2),x3),x4) - mul(mul(mul(x2,x1),x3),x4)"
                                " - mul(mul(x3,mul(x1,x2)),x4) + mul(mul(x3,mul(x2,x1)),x4)"
                                " + mul(x2,mul(mul(x1,x3),x4)) - mul(x2,mul(mul(x3,x1),x4))"
                                " - mul(x1,mul(x2,mul(x3,x4))) + mul(x3,mul(x1,mul(x2,x4)))")}),
         "PM(x,y,z,t) = 0 with (x,y,z,t) = (x1,x2,x3,x4)",
         {}});

    // ---- bracket algebras ------------------------------------------------

    {
        auto br = [&](const TP& a, const TP& b) { return mul2(0, a, b); };
        auto jac = [&](const TP& a, const TP& b, const TP& c) {
            return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
        };
        TP x = v(1), y = v(2), z = v(3), t = v(4);
        RawPoly malcev_raw{B, jac(x, y, br(x, z)) - br(jac(x, y, z), x)};
        auto polarized = polarize(malcev_raw);
        if (polarized.size() != 1)
            throw std::logic_error("catalog: malcev polarization produced multiple parts");
        Polynomial anticomm = from_expr(B, "br(x1,x2) + br(x2,x1)");
        out.push_back({"malcev",
                       make_system("malcev", B, {anticomm, polarized.front()}),
                       "anticommutativity and the Malcev identity J(x,y,[x,z]) = [J(x,y,z),x], "
                       "polarized (x at x1 and x4)",
                       {malcev_raw}});

        Polynomial sagle =
            finish(B, br(br(x, z), br(y, t)) - br(br(br(x, y), z), t) - br(br(br(y, z), t), x) -
                          br(br(br(z, t), x), y) - br(br(br(t, x), y), z));
        out.push_back({"sagle",
                       make_system("sagle", B, {anticomm, sagle}),
                       "anticommutativity and Sagle's identity [[x,z],[y,t]] = "
                       "[[[x,y],z],t] + [[[y,z],t],x] + [[[z,t],x],y] + [[[t,x],y],z]",
                       {}});
    }

    // ---- dendriform pairs ------------------------------------------------

    {
        // associators of a (prec, succ) pair
        const int PREC = 0, SUCC = 1;
        auto star = [&](const TP& a, const TP& b) {
            return mul2(PREC, a, b) + mul2(SUCC, a, b);
        };
        auto ar = [&](const TP& a, const TP& b, const TP& c) {  // right
            return mul2(PREC, mul2(PREC, a, b), c) - mul2(PREC, a, star(b, c));
        };
        auto am = [&](const TP& a, const TP& b, const TP& c) {  // middle
            return mul2(PREC, mul2(SUCC, a, b), c) - mul2(SUCC, a, mul2(PREC, b, c));
        };
        auto al = [&](const TP& a, const TP& b, const TP& c) {  // left
            return mul2(SUCC, star(a, b), c) - mul2(SUCC, a, mul2(SUCC, b, c));
        };
        TP x = v(1), y = v(2), z = v(3);

        out.push_back({"dendriform",
                       make_system("dendriform", D,
                                   {finish(D, ar(x, y, z)), finish(D, am(x, y, z)),
                                    finish(D, al(x, y, z))}),
                       "dendriform dialgebra: right, middle and left associators vanish",
                       {}});

        out.push_back({"alt-dendriform",
                       make_system("alt-dendriform", D,
                                   {finish(D, am(x, y, z) + ar(y, x, z)),
                                    finish(D, am(x, y, z) + al(x, z, y)),
                                    finish(D, ar(x, y, z) + ar(x, z, y)),
                                    finish(D, al(x, y, z) + al(y, x, z))}),
                       "alternative dendriform dialgebra; the last two are the lower-row "
                       "(redundant) identities",
                       {}});

        // the upper row plus the second lower-row identity: the irredundant
        // presentation whose liftings carry the 25-generator block and the
        // 109-term expression of E4(PM)
        out.push_back({"alt-dendriform-irredundant",
                       make_system("alt-dendriform-irredundant", D,
                                   {finish(D, am(x, y, z) + ar(y, x, z)),
                                    finish(D, am(x, y, z) + al(x, z, y)),
                                    finish(D, al(x, y, z) + al(y, x, z))}),
                       "alternative dendriform dialgebra without the redundant first "
                       "lower-row identity",
                       {}});
    }

    // ---- quadri alphabets ------------------------------------------------

    {
        const int NW = 0, NE = 1, SW = 2, SE = 3;
        auto succ = [&](const TP& a, const TP& b) { return mul2(NE, a, b) + mul2(SE, a, b); };
        auto prec = [&](const TP& a, const TP& b) { return mul2(NW, a, b) + mul2(SW, a, b); };
        auto vee = [&](const TP& a, const TP& b) { return mul2(SE, a, b) + mul2(SW, a, b); };
        auto wedge = [&](const TP& a, const TP& b) { return mul2(NE, a, b) + mul2(NW, a, b); };
        auto star = [&](const TP& a, const TP& b) { return succ(a, b) + prec(a, b); };

        auto qr = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NW, mul2(NW, a, b), c) - mul2(NW, a, star(b, c));
        };
        auto ql = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(SE, star(a, b), c) - mul2(SE, a, mul2(SE, b, c));
        };
        auto qne = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NE, wedge(a, b), c) - mul2(NE, a, succ(b, c));
        };
        auto qsw = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(SW, prec(a, b), c) - mul2(SW, a, vee(b, c));
        };
        auto qn = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NW, mul2(NE, a, b), c) - mul2(NE, a, prec(b, c));
        };
        auto qw = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NW, mul2(SW, a, b), c) - mul2(SW, a, wedge(b, c));
        };
        auto qs = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(SW, succ(a, b), c) - mul2(SE, a, mul2(SW, b, c));
        };
        auto qe = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NE, vee(a, b), c) - mul2(SE, a, mul2(NE, b, c));
        };
        auto qm = [&](const TP& a, const TP& b, const TP& c) {
            return mul2(NW, mul2(SE, a, b), c) - mul2(SE, a, mul2(NW, b, c));
        };
        TP x = v(1), y = v(2), z = v(3);

        out.push_back({"quadri",
                       make_system("quadri", Q,
                                   {finish(Q, qr(x, y, z)), finish(Q, ql(x, y, z)),
                                    finish(Q, qne(x, y, z)), finish(Q, qsw(x, y, z)),
                                    finish(Q, qn(x, y, z)), finish(Q, qw(x, y, z)),
                                    finish(Q, qs(x, y, z)), finish(Q, qe(x, y, z)),
                                    finish(Q, qm(x, y, z))}),
                       "quadri-algebra: all nine associators vanish",
                       {}});

        out.push_back({"alt-quadri",
                       make_system("alt-quadri", Q,
                                   {finish(Q, qr(x, y, z) + qm(y, x, z)),
                                    finish(Q, qr(x, y, z) + qr(x, z, y)),
                                    finish(Q, qn(x, y, z) + qw(y, x, z)),
                                    finish(Q, qn(x, y, z) + qne(x, z, y)),
                                    finish(Q, qne(x, y, z) + qe(y, x, z)),
                                    finish(Q, qw(x, y, z) + qsw(x, z, y)),
                                    finish(Q, qsw(x, y, z) + qs(y, x, z)),
                                    finish(Q, qm(x, y, z) + ql(x, z, y)),
                                    finish(Q, ql(x, y, z) + ql(y, x, z))}),
                       "alternative quadrialgebra: nine independent identities pairing the "
                       "compass associators",
                       {}});
    }

    // ---- triangle pairs --------------------------------------------------

    // LD2's first term reads x tr (y tr z) in the survey display; the
    // original definition has x tr (y tl z), and only that variant spans the
    // disuccessor module of pre-Lie, so the corrected form is stored.
    out.push_back(
        {"l-dendriform",
         make_system(
             "l-dendriform", T,
             {from_expr(T,
                        "tr(x1,tr(x2,x3)) - tr(tr(x1,x2),x3) - tr(tl(x1,x2),x3)"
                        " - tr(x2,tr(x1,x3)) + tr(tl(x2,x1),x3) + tr(tr(x2,x1),x3)"),
              from_expr(T,
                        "tr(x1,tl(x2,x3)) - tl(tr(x1,x2),x3) - tl(x2,tr(x1,x3))"
                        " - tl(x2,tl(x1,x3)) + tl(tl(x2,x1),x3)")}),
         "L-dendriform algebra, LD1 and LD2 (tl is the left triangle, tr the right)",
         {}});

    // The MD1..MD4 display uses the two triangles in mirrored roles relative
    // to the rest of the material (the L-dendriform axioms, the splitting
    // rules, and the Rota-Baxter construction all agree with each other and
    // disagree with it). The strings below transcribe the display as
    // printed; the mirror is then undone programmatically. Three separate
    // computations pin the orientation: the disuccessor module of
    // pre-Malcev, membership in the L-dendriform lifting module, and the
    // vertical product expansion of PM.
    {
        auto displayed = std::vector<Polynomial>{from_expr(T,
                        "tr(tr(tr(x1,x2),x3),x4) - tr(tr(tl(x2,x1),x3),x4)"
                        " - tr(tl(x3,tr(x1,x2)),x4) + tr(tl(x3,tl(x2,x1)),x4)"
                        " - tr(x1,tl(x2,tl(x3,x4))) - tr(x1,tr(x2,tl(x3,x4)))"
                        " - tr(x1,tl(x2,tr(x3,x4))) - tr(x1,tr(x2,tr(x3,x4)))"
                        " + tl(x3,tr(x1,tl(x2,x4))) + tl(x3,tr(x1,tr(x2,x4)))"
                        " + tl(tl(x2,x3),tr(x1,x4)) + tl(tr(x2,x3),tr(x1,x4))"
                        " - tl(tl(x3,x2),tr(x1,x4)) - tl(tr(x3,x2),tr(x1,x4))"
                        " - tl(x2,tr(tl(x3,x1),x4)) + tl(x2,tr(tr(x1,x3),x4))"),
              from_expr(T,
                        "tr(tr(tl(x1,x2),x3),x4) - tr(tr(tr(x2,x1),x3),x4)"
                        " - tr(tl(x3,tl(x1,x2)),x4) + tr(tl(x3,tr(x2,x1)),x4)"
                        " - tl(x1,tr(x2,tl(x3,x4))) - tl(x1,tr(x2,tr(x3,x4)))"
                        " + tl(x3,tl(x1,tr(x2,x4)))"
                        " + tr(tr(x2,x3),tl(x1,x4)) + tr(tr(x2,x3),tr(x1,x4))"
                        " - tr(tl(x3,x2),tl(x1,x4)) - tr(tl(x3,x2),tr(x1,x4))"
                        " - tr(x2,tl(tl(x3,x1),x4)) - tr(x2,tr(tl(x3,x1),x4))"
                        " - tr(x2,tl(tr(x3,x1),x4)) - tr(x2,tr(tr(x3,x1),x4))"
                        " + tr(x2,tl(tl(x1,x3),x4)) + tr(x2,tr(tl(x1,x3),x4))"
                        " + tr(x2,tl(tr(x1,x3),x4)) + tr(x2,tr(tr(x1,x3),x4))"),
              from_expr(T,
                        "tr(tl(tl(x1,x2),x3),x4) + tr(tl(tr(x1,x2),x3),x4)"
                        " - tr(tl(tl(x2,x1),x3),x4) - tr(tl(tr(x2,x1),x3),x4)"
                        " - tr(tr(x3,tl(x1,x2)),x4) - tr(tr(x3,tr(x1,x2)),x4)"
                        " + tr(tr(x3,tl(x2,x1)),x4) + tr(tr(x3,tr(x2,x1)),x4)"
                        " - tl(x1,tl(x2,tr(x3,x4)))"
                        " + tr(x3,tl(x1,tl(x2,x4))) + tr(x3,tr(x1,tl(x2,x4)))"
                        " + tr(x3,tl(x1,tr(x2,x4))) + tr(x3,tr(x1,tr(x2,x4)))"
                        " + tr(tl(x2,x3),tl(x1,x4)) + tr(tl(x2,x3),tr(x1,x4))"
                        " - tr(tr(x3,x2),tl(x1,x4)) - tr(tr(x3,x2),tr(x1,x4))"
                        " - tl(x2,tr(tr(x3,x1),x4)) + tl(x2,tr(tl(x1,x3),x4))"),
              from_expr(T,
                        "tl(tl(tl(x1,x2),x3),x4) + tl(tr(tl(x1,x2),x3),x4)"
                        " + tl(tl(tr(x1,x2),x3),x4) + tl(tr(tr(x1,x2),x3),x4)"
                        " - tl(tl(tl(x2,x1),x3),x4) - tl(tr(tl(x2,x1),x3),x4)"
                        " - tl(tl(tr(x2,x1),x3),x4) - tl(tr(tr(x2,x1),x3),x4)"
                        " - tl(tl(x3,tl(x1,x2)),x4) - tl(tr(x3,tl(x1,x2)),x4)"
                        " - tl(tl(x3,tr(x1,x2)),x4) - tl(tr(x3,tr(x1,x2)),x4)"
                        " + tl(tl(x3,tl(x2,x1)),x4) + tl(tr(x3,tl(x2,x1)),x4)"
                        " + tl(tl(x3,tr(x2,x1)),x4) + tl(tr(x3,tr(x2,x1)),x4)"
                        " - tl(x1,tl(x2,tl(x3,x4))) + tl(x3,tl(x1,tl(x2,x4)))"
                        " + tl(tl(x2,x3),tl(x1,x4)) + tl(tr(x2,x3),tl(x1,x4))"
                        " - tl(tl(x3,x2),tl(x1,x4)) - tl(tr(x3,x2),tl(x1,x4))"
                        " - tl(x2,tl(tl(x3,x1),x4)) - tl(x2,tl(tr(x3,x1),x4))"
                        " + tl(x2,tl(tl(x1,x3),x4)) + tl(x2,tl(tr(x1,x3),x4))")};
        std::vector<Polynomial> corrected;
        for (const auto& f : displayed) corrected.push_back(rename_ops(f, {"tr", "tl"}, T));
        out.push_back({"m-dendriform",
                       make_system("m-dendriform", T, corrected),
                       "M-dendriform algebra, MD1-MD4 with (x,y,z,t) = (x1,x2,x3,x4); the "
                       "triangle roles of the printed definition are mirrored here so that "
                       "tl plays the left-path half, as in the L-dendriform axioms",
                       {}});
    }

    // ---- Jordan side -----------------------------------------------------

    {
        auto mu = [&](const TP& a, const TP& b) { return mul2(0, a, b); };
        TP x = v(1), y = v(2);
        RawPoly jordan_raw{M, mu(mu(x, y), mu(x, x)) - mu(x, mu(y, mu(x, x)))};
        auto polarized = polarize(jordan_raw);
        if (polarized.size() != 1)
            throw std::logic_error("catalog: jordan polarization produced multiple parts");
        out.push_back({"jordan",
                       make_system("jordan", M,
                                   {from_expr(M, "mul(x1,x2) - mul(x2,x1)"), polarized.front()}),
                       "commutativity and the Jordan identity (x o y) o (x o x) = "
                       "x o (y o (x o x)), polarized (x at x1, x3, x4)",
                       {jordan_raw}});
    }

    {
        auto mu = [&](const TP& a, const TP& b) { return mul2(0, a, b); };
        auto circ = [&](const TP& a, const TP& b) { return mu(a, b) + mu(b, a); };
        TP x = v(1), y = v(2), z = v(3), t = v(4);
        Polynomial pj1 =
            finish(M, mu(circ(x, y), mu(z, t)) + mu(circ(y, z), mu(x, t)) +
                          mu(circ(z, x), mu(y, t)) - mu(z, mu(circ(x, y), t)) -
                          mu(x, mu(circ(y, z), t)) - mu(y, mu(circ(z, x), t)));
        Polynomial pj2 =
            finish(M, mu(x, mu(y, mu(z, t))) + mu(z, mu(y, mu(x, t))) +
                          mu(circ(circ(x, z), y), t) - mu(z, mu(circ(x, y), t)) -
                          mu(x, mu(circ(y, z), t)) - mu(y, mu(circ(z, x), t)));
        out.push_back({"pre-jordan",
                       make_system("pre-jordan", M, {pj1, pj2}),
                       "pre-Jordan algebra, both degree-4 identities with x o y = xy + yx "
                       "expanded",
                       {}});
    }

    {
        const int TL = 0, TR = 1;
        auto cdot = [&](const TP& a, const TP& b) { return mul2(TR, a, b) + mul2(TL, b, a); };
        auto diam = [&](const TP& a, const TP& b) { return mul2(TR, a, b) + mul2(TL, a, b); };
        auto circ = [&](const TP& a, const TP& b) { return cdot(a, b) + cdot(b, a); };
        auto R = [&](const TP& a, const TP& b) { return mul2(TR, a, b); };
        auto L = [&](const TP& a, const TP& b) { return mul2(TL, a, b); };
        TP x = v(1), y = v(2), z = v(3), t = v(4);
        Polynomial jd1 = finish(
            T, R(circ(x, y), R(z, t)) + R(circ(y, z), R(x, t)) + R(circ(z, x), R(y, t)) -
                   R(x, R(circ(y, z), t)) - R(y, R(circ(z, x), t)) - R(z, R(circ(x, y), t)));
        Polynomial jd2 = finish(
            T, R(circ(x, y), R(z, t)) + R(circ(y, z), R(x, t)) + R(circ(z, x), R(y, t)) -
                   R(x, R(y, R(z, t))) - R(z, R(y, R(x, t))) - R(circ(y, circ(z, x)), t));
        Polynomial jd3 = finish(
            T, R(circ(x, y), L(z, t)) + L(cdot(x, z), diam(y, t)) + L(cdot(y, z), diam(x, t)) -
                   R(x, L(z, diam(y, t))) - R(y, L(z, diam(x, t))) - L(cdot(circ(x, y), z), t));
        Polynomial jd4 = finish(
            T, L(cdot(z, y), diam(x, t)) + L(cdot(x, y), diam(z, t)) + R(circ(x, z), L(y, t)) -
                   R(x, L(cdot(z, y), t)) - R(z, L(cdot(x, y), t)) - L(y, diam(circ(x, z), t)));
        Polynomial jd5 = finish(
            T, R(circ(x, y), L(z, t)) + L(cdot(x, z), diam(y, t)) + L(cdot(y, z), diam(x, t)) -
                   R(x, R(y, L(z, t))) - L(z, diam(y, diam(x, t))) - L(cdot(y, cdot(x, z)), t));
        out.push_back({"j-dendriform",
                       make_system("j-dendriform", T, {jd1, jd2, jd3, jd4, jd5}),
                       "J-dendriform algebra; the auxiliary products are x.y = x tr y + y tl x, "
                       "x diamond y = x tr y + x tl y, x o y = x.y + y.x",
                       {}});
    }

    return out;
}

std::vector<RuleEntry> build_rules() {
    std::vector<RuleEntry> out;
    const OpAlphabet M({"mul"});
    const OpAlphabet B({"br"});
    const OpAlphabet D({"prec", "succ"});
    const OpAlphabet Q({"nw", "ne", "sw", "se"});
    const OpAlphabet T({"tl", "tr"});

    out.push_back({"commutator", make_rule("commutator", B, M, {"mul(s1,s2) - mul(s2,s1)"}),
                   "[x,y] = xy - yx"});
    out.push_back({"anticommutator",
                   make_rule("anticommutator", M, M, {"mul(s1,s2) + mul(s2,s1)"}),
                   "x o y = xy + yx"});
    out.push_back({"dendriform-commutator",
                   make_rule("dendriform-commutator", M, D, {"succ(s1,s2) - prec(s2,s1)"}),
                   "x . y = x succ y - y prec x"});
    out.push_back({"dendriform-anticommutator",
                   make_rule("dendriform-anticommutator", M, D, {"succ(s1,s2) + prec(s2,s1)"}),
                   "x . y = x succ y + y prec x"});
    out.push_back({"dendriform-sum",
                   make_rule("dendriform-sum", M, D, {"prec(s1,s2) + succ(s1,s2)"}),
                   "x * y = x prec y + x succ y"});
    out.push_back({"quadri-horizontal",
                   make_rule("quadri-horizontal", D, Q,
                             {"nw(s1,s2) + sw(s1,s2)", "ne(s1,s2) + se(s1,s2)"}),
                   "prec = nw + sw, succ = ne + se (horizontal dendriform pair)"});
    out.push_back({"quadri-vertical",
                   make_rule("quadri-vertical", D, Q,
                             {"ne(s1,s2) + nw(s1,s2)", "se(s1,s2) + sw(s1,s2)"}),
                   "wedge = ne + nw plays prec, vee = se + sw plays succ (vertical pair)"});
    out.push_back({"quadri-sum",
                   make_rule("quadri-sum", M, Q,
                             {"se(s1,s2) + ne(s1,s2) + nw(s1,s2) + sw(s1,s2)"}),
                   "x * y = sum of the four quadri products"});
    out.push_back({"m-dendriform-extraction",
                   make_rule("m-dendriform-extraction", T, Q,
                             {"ne(s1,s2) - sw(s2,s1)", "se(s1,s2) - nw(s2,s1)"}),
                   "x tl y = x ne y - y sw x, x tr y = x se y - y nw x"});
    out.push_back({"j-dendriform-extraction",
                   make_rule("j-dendriform-extraction", T, Q,
                             {"ne(s1,s2) + sw(s2,s1)", "se(s1,s2) + nw(s2,s1)"}),
                   "x tl y = x ne y + y sw x, x tr y = x se y + y nw x"});
    out.push_back({"premalcev-horizontal",
                   make_rule("premalcev-horizontal", M, T, {"tr(s1,s2) + tl(s1,s2)"}),
                   "x .h y = x tr y + x tl y"});
    out.push_back({"premalcev-vertical",
                   make_rule("premalcev-vertical", M, T, {"tr(s1,s2) - tl(s2,s1)"}),
                   "x .v y = x tr y - y tl x"});
    return out;
}

OperatorPoly parse_word(const OpAlphabet& alpha,
                        const std::vector<std::pair<Rat, std::string>>& terms) {
    // each factor is "L:<expr>" or "R:<expr>", factors separated by " ; "
    OperatorPoly w;
    for (const auto& [coeff, spec] : terms) {
        OperatorTerm term;
        term.coeff = coeff;
        std::size_t pos = 0;
        while (pos < spec.size()) {
            std::size_t next = spec.find(" ; ", pos);
            std::string factor =
                next == std::string::npos ? spec.substr(pos) : spec.substr(pos, next - pos);
            pos = next == std::string::npos ? spec.size() : next + 3;
            if (factor.size() < 3 || (factor[0] != 'L' && factor[0] != 'R') || factor[1] != ':')
                throw std::logic_error("catalog: bad operator factor " + factor);
            OpFactor f;
            f.kind = factor[0] == 'L' ? OpFactor::L : OpFactor::R;
            f.subscript = parse_poly_expr(factor.substr(2), alpha).terms;
            term.word.push_back(std::move(f));
        }
        w.terms.push_back(std::move(term));
    }
    return w;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_systems() {
    static const std::vector<CatalogEntry> systems = build_systems();
    return systems;
}

const std::vector<RuleEntry>& catalog_rules() {
    static const std::vector<RuleEntry> rules = build_rules();
    return rules;
}

const CatalogEntry& get_entry(const std::string& name) {
    for (const auto& e : catalog_systems())
        if (e.name == name) return e;
    std::ostringstream msg;
    msg << "unknown system '" << name << "'; available:";
    for (const auto& e : catalog_systems()) msg << " " << e.name;
    throw std::invalid_argument(msg.str());
}

const IdentitySystem& get_system(const std::string& name) { return get_entry(name).system; }

const ExpansionRule& get_rule(const std::string& name) {
    for (const auto& e : catalog_rules())
        if (e.name == name) return e.rule;
    std::ostringstream msg;
    msg << "unknown rule '" << name << "'; available:";
    for (const auto& e : catalog_rules()) msg << " " << e.name;
    throw std::invalid_argument(msg.str());
}

const std::vector<OperatorPoly>& premalcev_bimodule_axioms() {
    static const std::vector<OperatorPoly> axioms = [] {
        const OpAlphabet M({"mul"});
        // x = x1, y = x2, z = x3; products in subscripts are the algebra's
        std::vector<OperatorPoly> ws;
        ws.push_back(parse_word(
            M, {{Rat(1), "R:x1 ; R:x2 ; R:x3"},
                {Rat(-1), "R:x1 ; R:x2 ; L:x3"},
                {Rat(-1), "R:x1 ; L:x2 ; R:x3"},
                {Rat(1), "R:x1 ; L:x2 ; L:x3"},
                {Rat(-1), "R:mul(x3,mul(x2,x1))"},
                {Rat(1), "L:x2 ; R:mul(x3,x1)"},
                {Rat(1), "L:mul(x3,x2) ; R:x1"},
                {Rat(-1), "L:mul(x2,x3) ; R:x1"},
                {Rat(-1), "L:x3 ; R:x1 ; L:x2"},
                {Rat(1), "L:x3 ; R:x1 ; R:x2"}}));
        ws.push_back(parse_word(
            M, {{Rat(1), "R:x1 ; R:x2 ; L:x3"},
                {Rat(-1), "R:x1 ; R:x2 ; R:x3"},
                {Rat(-1), "R:x1 ; L:x2 ; L:x3"},
                {Rat(1), "R:x1 ; L:x2 ; R:x3"},
                {Rat(-1), "L:x3 ; R:mul(x2,x1)"},
                {Rat(1), "L:x2 ; L:x3 ; R:x1"},
                {Rat(1), "R:mul(x3,x1) ; R:x2"},
                {Rat(-1), "R:mul(x3,x1) ; L:x2"},
                {Rat(-1), "R:mul(mul(x2,x3),x1)"},
                {Rat(1), "R:mul(mul(x3,x2),x1)"}}));
        ws.push_back(parse_word(
            M, {{Rat(1), "R:x1 ; L:mul(x2,x3)"},
                {Rat(-1), "R:x1 ; L:mul(x3,x2)"},
                {Rat(-1), "R:x1 ; R:mul(x2,x3)"},
                {Rat(1), "R:x1 ; R:mul(x3,x2)"},
                {Rat(-1), "L:x2 ; L:x3 ; R:x1"},
                {Rat(1), "R:mul(x2,mul(x3,x1))"},
                {Rat(1), "R:mul(x2,x1) ; L:x3"},
                {Rat(-1), "R:mul(x2,x1) ; R:x3"},
                {Rat(-1), "L:x3 ; R:x1 ; R:x2"},
                {Rat(1), "L:x3 ; R:x1 ; L:x2"}}));
        ws.push_back(parse_word(
            M, {{Rat(1), "L:mul(mul(x1,x2),x3)"},
                {Rat(-1), "L:mul(mul(x2,x1),x3)"},
                {Rat(-1), "L:mul(x3,mul(x1,x2))"},
                {Rat(1), "L:mul(x3,mul(x2,x1))"},
                {Rat(-1), "L:x1 ; L:x2 ; L:x3"},
                {Rat(1), "L:x3 ; L:x1 ; L:x2"},
                {Rat(1), "L:mul(x2,x3) ; L:x1"},
                {Rat(-1), "L:mul(x3,x2) ; L:x1"},
                {Rat(-1), "L:x2 ; L:mul(x3,x1)"},
                {Rat(1), "L:x2 ; L:mul(x1,x3)"}}));
        return ws;
    }();
    return axioms;
}

const OperatorPoly& kuzmin_representation_word() {
    static const OperatorPoly word = [] {
        const OpAlphabet M({"mul"});
        // subscripts expand the bracket through the commutator
        return parse_word(
            M, {{Rat(1),
                 "L:mul(mul(x1,x2),x3) - mul(mul(x2,x1),x3) - mul(x3,mul(x1,x2)) + "
                 "mul(x3,mul(x2,x1))"},
                {Rat(-1), "L:x1 ; L:x2 ; L:x3"},
                {Rat(1), "L:x3 ; L:x1 ; L:x2"},
                {Rat(-1), "L:x2 ; L:mul(x3,x1) - mul(x1,x3)"},
                {Rat(1), "L:mul(x2,x3) - mul(x3,x2) ; L:x1"}});
    }();
    return word;
}

}  // namespace nonassoc
