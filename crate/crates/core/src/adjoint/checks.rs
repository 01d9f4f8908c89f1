//! Exhaustive checks over caller-supplied domains: the relations defining
//! the generator map, the cocycle identities for `gamma` and `lambda`, the
//! group axioms of `F(M,T)`, and the action on `M`.
//!
//! Domains are slices so callers choose between exhaustive enumeration and
//! sampling. `lambda(x, y) = gamma(y, x)^{-1} gamma(x, y)` is central, and
//! central elements are combined with the group law of `F(M,T)` itself
//! (written additively in the statements).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{AdjContext, FElement};
use crate::abelian::GroupElement;
use crate::oracle;

/// Result of one identity or axiom, checked over every case in its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: u64,
    /// First failing case, if any.
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<CheckOutcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    name: &'static str,
    statement: &'static str,
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str, statement: &'static str) -> Self {
        Tally { name, statement, cases: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            statement: self.statement,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn pairs(domain: &[GroupElement]) -> impl Iterator<Item = (&GroupElement, &GroupElement)> {
    domain.iter().flat_map(move |a| domain.iter().map(move |b| (a, b)))
}

fn triples(domain: &[GroupElement]) -> impl Iterator<Item = (&GroupElement, &GroupElement, &GroupElement)> {
    domain.iter().flat_map(move |a| domain.iter().flat_map(move |b| domain.iter().map(move |c| (a, b, c))))
}

impl AdjContext {
    fn mul3(&self, a: &FElement, b: &FElement, c: &FElement) -> FElement {
        self.f_mul(&self.f_mul(a, b), c)
    }

    fn mul_all(&self, items: &[FElement]) -> FElement {
        items.iter().fold(self.identity(), |acc, g| self.f_mul(&acc, g))
    }

    /// `lambda(x, y) = gamma(y, x)^{-1} gamma(x, y)`.
    pub fn lambda(&self, x: &GroupElement, y: &GroupElement) -> FElement {
        self.f_mul(&self.f_inv(&self.gamma(y, x)), &self.gamma(x, y))
    }

    /// `a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: &FElement, b: &FElement) -> FElement {
        self.mul_all(&[self.f_inv(a), self.f_inv(b), a.clone(), b.clone()])
    }

    /// `e_0^{-1} e_x`
    fn shifted_generator(&self, x: &GroupElement) -> FElement {
        self.f_mul(&self.f_inv(&self.phi(&self.group.zero())), &self.phi(x))
    }

    /// `phi(e_x) phi(e_{y*x}) = phi(e_y) phi(e_x)` for all `x, y` in the
    /// domain, i.e. the defining relations of the adjoint group hold.
    pub fn check_phi_relations(&self, domain: &[GroupElement]) -> CheckOutcome {
        let mut t = Tally::new("phi_relations", "phi(e_x) phi(e_{y*x}) = phi(e_y) phi(e_x)");
        for (x, y) in pairs(domain) {
            let lhs = self.f_mul(&self.phi(x), &self.phi(&self.quandle_op(y, x)));
            let rhs = self.f_mul(&self.phi(y), &self.phi(x));
            t.record(lhs == rhs, || format!("x={x} y={y}: {lhs} != {rhs}"));
        }
        t.finish()
    }

    /// The identity chain for `gamma` and `lambda`, over all pairs and
    /// triples from `domain`. `M` should be closed enough under the group
    /// operations that the identities make sense; arguments are computed in
    /// `M` regardless of membership in `domain`.
    pub fn verify_identity_suite(&self, domain: &[GroupElement]) -> IdentityReport {
        let m = &self.group;
        let tm = |v: &GroupElement| m.apply(&self.endo, v);
        let add = |a: &GroupElement, b: &GroupElement| m.add_unchecked(a, b);
        let sub = |a: &GroupElement, b: &GroupElement| m.sub_unchecked(a, b);
        let id = self.identity();
        let zero = m.zero();
        let e0 = self.phi(&zero);
        let e0_inv = self.f_inv(&e0);
        let mut checks = Vec::new();

        let mut t = Tally::new("gamma_normalized", "gamma(0,y) = gamma(y,0) = 1");
        for y in domain {
            let ok = self.gamma(&zero, y) == id && self.gamma(y, &zero) == id;
            t.record(ok, || format!("y={y}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("additive_form", "e_0^-1 e_{x+y} = gamma(x,y) e_0^-1 e_x e_0^-1 e_y");
        for (x, y) in pairs(domain) {
            let lhs = self.shifted_generator(&add(x, y));
            let rhs = self.mul3(&self.gamma(x, y), &self.shifted_generator(x), &self.shifted_generator(y));
            t.record(lhs == rhs, || format!("x={x} y={y}: {lhs} != {rhs}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("gamma_in_kernel", "p . gamma(x,y) = p");
        for (x, y) in pairs(domain) {
            let g = self.gamma(x, y);
            let ok = domain.iter().take(4).all(|p| self.act(p, &g) == *p);
            t.record(ok, || format!("x={x} y={y}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("cocycle", "gamma(x,y+z) gamma(y,z) = gamma(x+y,z) gamma(x,y)");
        for (x, y, z) in triples(domain) {
            let lhs = self.f_mul(&self.gamma(x, &add(y, z)), &self.gamma(y, z));
            let rhs = self.f_mul(&self.gamma(&add(x, y), z), &self.gamma(x, y));
            t.record(lhs == rhs, || format!("x={x} y={y} z={z}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_commutator", "gamma(y,x)^-1 gamma(x,y) = [e_0^-1 e_y, e_0^-1 e_x]");
        for (x, y) in pairs(domain) {
            let lhs = self.lambda(x, y);
            let rhs = self.commutator(&self.shifted_generator(y), &self.shifted_generator(x));
            t.record(lhs == rhs, || format!("x={x} y={y}: {lhs} != {rhs}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("conjugate_generator", "e_0 e_x e_0^-1 = e_{T^-1 x}");
        for x in domain {
            let lhs = self.mul3(&e0, &self.phi(x), &e0_inv);
            let rhs = self.phi(&self.apply_power(-1, x));
            t.record(lhs == rhs, || format!("x={x}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("generator_product", "e_u e_v = gamma(Tu,v)^-1 e_0 e_{Tu+v}");
        for (u, v) in pairs(domain) {
            let lhs = self.f_mul(&self.phi(u), &self.phi(v));
            let tu = tm(u);
            let rhs = self.mul3(&self.f_inv(&self.gamma(&tu, v)), &e0, &self.phi(&add(&tu, v)));
            t.record(lhs == rhs, || format!("u={u} v={v}: {lhs} != {rhs}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("twisted_symmetry", "gamma(x,y) = gamma(Ty, x+y-Ty)");
        for (x, y) in pairs(domain) {
            let ty = tm(y);
            let ok = self.gamma(x, y) == self.gamma(&ty, &sub(&add(x, y), &ty));
            t.record(ok, || format!("x={x} y={y}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("twisted_vanishing", "gamma(Ty, y-Ty) = 1");
        for y in domain {
            let ty = tm(y);
            t.record(self.gamma(&ty, &sub(y, &ty)) == id, || format!("y={y}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_via_gamma", "lambda(u,v) = gamma(u,v) - gamma(v,u) = -gamma(v-Tv, u)");
        for (u, v) in pairs(domain) {
            let lam = self.lambda(u, v);
            let diff = self.f_mul(&self.gamma(u, v), &self.f_inv(&self.gamma(v, u)));
            let rhs = self.f_inv(&self.gamma(&sub(v, &tm(v)), u));
            t.record(lam == diff && lam == rhs, || format!("u={u} v={v}: {lam} {diff} {rhs}"));
        }
        checks.push(t.finish());

        let lam = |a: &GroupElement, b: &GroupElement| self.lambda(a, b);
        let plus = |a: &FElement, b: &FElement| self.f_mul(a, b);
        let minus = |a: &FElement, b: &FElement| self.f_mul(a, &self.f_inv(b));

        let mut t =
            Tally::new("lambda_twisted_cocycle", "lambda(u+v,z) + lambda(u,v-Tv) = lambda(u,v-Tv+z) + lambda(v,z)");
        for (u, v, z) in triples(domain) {
            let w = sub(v, &tm(v));
            let lhs = plus(&lam(&add(u, v), z), &lam(u, &w));
            let rhs = plus(&lam(u, &add(&w, z)), &lam(v, z));
            t.record(lhs == rhs, || format!("u={u} v={v} z={z}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_cocycle", "lambda(u+v,z) + lambda(u,v) = lambda(u,v+z) + lambda(v,z)");
        for (u, v, z) in triples(domain) {
            let lhs = plus(&lam(&add(u, v), z), &lam(u, v));
            let rhs = plus(&lam(u, &add(v, z)), &lam(v, z));
            t.record(lhs == rhs, || format!("u={u} v={v} z={z}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_translation", "lambda(u,v-Tv) - lambda(u,v) = lambda(u,v-Tv+z) - lambda(u,v+z)");
        for (u, v, z) in triples(domain) {
            let w = sub(v, &tm(v));
            let lhs = minus(&lam(u, &w), &lam(u, v));
            let rhs = minus(&lam(u, &add(&w, z)), &lam(u, &add(v, z)));
            t.record(lhs == rhs, || format!("u={u} v={v} z={z}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_translation_base", "lambda(u,-Tv) = lambda(u,v-Tv+z) - lambda(u,v+z)");
        for (u, v, z) in triples(domain) {
            let tv = tm(v);
            let lhs = lam(u, &m.neg_unchecked(&tv));
            let rhs = minus(&lam(u, &add(&sub(v, &tv), z)), &lam(u, &add(v, z)));
            t.record(lhs == rhs, || format!("u={u} v={v} z={z}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_additive_second", "lambda(u,b) = lambda(u,a+b) - lambda(u,a)");
        for (u, a, b) in triples(domain) {
            let lhs = lam(u, b);
            let rhs = minus(&lam(u, &add(a, b)), &lam(u, a));
            t.record(lhs == rhs, || format!("u={u} a={a} b={b}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("lambda_biadditive", "lambda(u+u',v) = lambda(u,v) + lambda(u',v), lambda skew");
        for (u, w, v) in triples(domain) {
            let first = lam(&add(u, w), v) == plus(&lam(u, v), &lam(w, v));
            let skew = lam(u, v) == self.f_inv(&lam(v, u));
            t.record(first && skew, || format!("u={u} u'={w} v={v}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("gamma_biadditive", "gamma(x+x',y) = gamma(x,y) gamma(x',y), and in y");
        for (x, w, y) in triples(domain) {
            let left = self.gamma(&add(x, w), y) == self.f_mul(&self.gamma(x, y), &self.gamma(w, y));
            let right = self.gamma(y, &add(x, w)) == self.f_mul(&self.gamma(y, x), &self.gamma(y, w));
            t.record(left && right, || format!("x={x} x'={w} y={y}"));
        }
        checks.push(t.finish());

        let mut t = Tally::new("twist_relation", "gamma(x,y) = gamma(Ty,x)");
        for (x, y) in pairs(domain) {
            t.record(self.gamma(x, y) == self.gamma(&tm(y), x), || format!("x={x} y={y}"));
        }
        checks.push(t.finish());

        IdentityReport { checks }
    }

    /// All elements `(k, x, a)` with `k` in `degrees`, `x` in `xs` and `a`
    /// ranging over all of `S(M,T)`.
    pub fn elements_with(&self, degrees: core::ops::RangeInclusive<i64>, xs: &[GroupElement]) -> Vec<FElement> {
        let s: Vec<GroupElement> = self.s.quotient().elements().collect();
        let mut out = Vec::new();
        for k in degrees {
            for x in xs {
                for a in &s {
                    out.push(FElement::new(k, x.clone(), a.clone()));
                }
            }
        }
        out
    }

    /// `(gh)l = g(hl)` for `g` in `left`, `h` in `middle`, `l` in `right`.
    pub fn check_associativity(&self, left: &[FElement], middle: &[FElement], right: &[FElement]) -> CheckOutcome {
        let mut t = Tally::new("associativity", "(g h) l = g (h l)");
        for g in left {
            for h in middle {
                let gh = self.f_mul(g, h);
                for l in right {
                    let lhs = self.f_mul(&gh, l);
                    let rhs = self.f_mul(g, &self.f_mul(h, l));
                    t.record(lhs == rhs, || format!("g={g} h={h} l={l}"));
                }
            }
        }
        t.finish()
    }

    /// Every `(0, 0, a)` commutes with every element, and
    /// `(k, x, a) = (k, x, 0)(0, 0, a)`. Together with associativity on the
    /// elements with `a = 0` this gives associativity everywhere.
    pub fn check_central_classes(&self, elements: &[FElement]) -> CheckOutcome {
        let mut t = Tally::new("central_classes", "(0,0,a) is central; (k,x,a) = (k,x,0)(0,0,a)");
        let s = self.s.quotient();
        for a in s.elements() {
            let c = self.central(a);
            for g in elements {
                t.record(self.f_mul(&c, g) == self.f_mul(g, &c), || format!("a={} g={g}", c.alpha));
            }
        }
        for g in elements {
            let bare = FElement::new(g.k, g.x.clone(), s.zero());
            t.record(self.f_mul(&bare, &self.central(g.alpha.clone())) == *g, || format!("g={g}"));
        }
        t.finish()
    }

    /// Two-sided identity and inverses.
    pub fn check_inverses(&self, elements: &[FElement]) -> CheckOutcome {
        let mut t = Tally::new("inverses", "g g^-1 = g^-1 g = 1, 1 g = g 1 = g");
        let id = self.identity();
        for g in elements {
            let inv = self.f_inv(g);
            let ok = self.f_mul(g, &inv) == id
                && self.f_mul(&inv, g) == id
                && self.f_mul(&id, g) == *g
                && self.f_mul(g, &id) == *g;
            t.record(ok, || format!("g={g}"));
        }
        t.finish()
    }

    /// The degree adds, and on degree zero the law is
    /// `(0,x,a)(0,y,b) = (0, x+y, a+b+[x (x) y])`.
    pub fn check_degree_laws(&self, left: &[FElement], right: &[FElement]) -> CheckOutcome {
        let mut t = Tally::new("degree_laws", "eps(gh) = eps(g) + eps(h); degree-zero product law");
        let s = self.s.quotient();
        for g in left {
            for h in right {
                let gh = self.f_mul(g, h);
                let mut ok = gh.k == g.k + h.k;
                if g.k == 0 && h.k == 0 {
                    let alpha = s.add_unchecked(&s.add_unchecked(&g.alpha, &h.alpha), &self.s.class_of(&g.x, &h.x));
                    ok &= gh.x == self.group.add_unchecked(&g.x, &h.x) && gh.alpha == alpha;
                }
                t.record(ok, || format!("g={g} h={h}"));
            }
        }
        t.finish()
    }

    /// `(p.g).h = p.(gh)`, `p.1 = p`, and `p.phi(x) = p*x`.
    pub fn check_action(&self, points: &[GroupElement], left: &[FElement], right: &[FElement]) -> CheckOutcome {
        let mut t = Tally::new("right_action", "(p.g).h = p.(gh), p.1 = p, p.e_x = p*x");
        let id = self.identity();
        for p in points {
            t.record(self.act(p, &id) == *p, || format!("p={p}: identity"));
            for g in left {
                let pg = self.act(p, g);
                if g.k == 1 && g.alpha.is_zero() {
                    t.record(pg == self.quandle_op(p, &g.x), || format!("p={p} x={}: generator", g.x));
                }
                for h in right {
                    let ok = self.act(&pg, h) == self.act(p, &self.f_mul(g, h));
                    t.record(ok, || format!("p={p} g={g} h={h}"));
                }
            }
        }
        t.finish()
    }

    /// Orbit of `0` is `(1-T)M`, all of `M` exactly when connected; the
    /// stabilizer of `0` among degree-zero elements has `|ker(1-T)| |S|`
    /// elements and that many is the order of [`AdjContext::pi1`].
    /// Enumerates `M x S`, so the caller bounds `|M|`.
    pub fn check_orbit_and_stabilizer(&self) -> CheckOutcome {
        let mut t = Tally::new("orbit_stabilizer", "0.F = (1-T)M; |Stab(0) in F0| = |ker(1-T)| |S| = |pi1|");
        let m = &self.group;
        let size = m.cardinality() as usize;
        let zero = m.zero();
        let mut in_orbit = alloc::vec![false; size];
        for x in m.elements() {
            in_orbit[m.index_of(&self.act(&zero, &self.phi(&x)))] = true;
        }
        let mut in_image = alloc::vec![false; size];
        for x in m.elements() {
            in_image[m.index_of(&m.apply(&self.one_minus, &x))] = true;
        }
        t.record(in_orbit == in_image, || String::from("orbit of 0 differs from (1-T)M"));
        let full = in_orbit.iter().all(|&b| b);
        t.record(full == self.connected, || format!("orbit is all of M: {full}, connected: {}", self.connected));

        let s_size = self.s.quotient().cardinality();
        let stabilizer = self
            .elements_with(0..=0, &m.elements().collect::<Vec<_>>())
            .iter()
            .filter(|g| self.act(&zero, g).is_zero())
            .count() as u128;
        let kernel = oracle::kernel_size(m, &self.one_minus, size).expect("size within its own cardinality") as u128;
        t.record(stabilizer == kernel * s_size, || format!("stabilizer {stabilizer} vs {kernel} * {s_size}"));
        match self.pi1() {
            Ok(pi1) => t.record(pi1.order() == stabilizer, || format!("pi1 order {} vs {stabilizer}", pi1.order())),
            Err(e) => t.record(false, || format!("pi1 failed: {e}")),
        }
        t.finish()
    }
}
