//! Buchberger's algorithm for submodules of graded free modules, normal forms,
//! and kernel extraction through an elimination order.
//!
//! All input is homogeneous. S-pairs are processed lowest degree first with
//! generator-index tie breaking, so repeated runs produce identical bases.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::modelem::{ModuleElement, ModuleOrder};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use std::collections::BTreeSet;

/// A Groebner basis of a submodule of a twisted free module.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    field: PrimeField,
    twists: Vec<i64>,
    order: ModuleOrder,
    gens: Vec<ModuleElement>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

/// Full normal form: repeatedly cancels the largest reducible term, using the
/// first dividing generator in list order. The result has no term divisible by
/// any leading term of the basis.
pub fn normal_form(f: &ModuleElement, basis: &GroebnerBasis) -> ModuleElement {
    f.check_rank(basis.rank()).expect("rank mismatch in normal_form");
    reduce_against(f, &basis.gens, basis.order, &basis.field)
}

fn leading_data(g: &ModuleElement, order: ModuleOrder) -> (usize, Monomial, u32) {
    let (pos, m, c) = g.leading_term(order).expect("zero basis element");
    (pos, m.clone(), c)
}

pub(crate) fn reduce_against(
    f: &ModuleElement,
    gens: &[ModuleElement],
    order: ModuleOrder,
    field: &PrimeField,
) -> ModuleElement {
    let leads: Vec<(usize, Monomial, u32)> =
        gens.iter().map(|g| leading_data(g, order)).collect();
    let rank = f.rank();
    let mut work = f.clone();
    // Irreducible terms move from `work` into `done`, largest first.
    let mut done = ModuleElement::zero(rank);
    'outer: while let Some((pos, mono, coeff)) = work
        .leading_term(order)
        .map(|(p, m, c)| (p, m.clone(), c))
    {
        for (gi, (lpos, lmono, lc)) in leads.iter().enumerate() {
            if *lpos == pos {
                if let Some(q) = lmono.quotient_into(&mono) {
                    let scale = field.div(coeff, *lc);
                    let sub = gens[gi].mul_term(field, &q, scale);
                    work = work.sub(field, &sub);
                    continue 'outer;
                }
            }
        }
        let head = ModuleElement::from_poly(rank, pos, Polynomial::term(mono, coeff));
        done = done.add(field, &head);
        work = work.sub(field, &head);
    }
    done
}

/// Reduce only leading terms: returns zero iff `f` lies in the span of a
/// Groebner basis. Cheaper than a full normal form for membership tests.
pub(crate) fn top_reduces_to_zero(
    f: &ModuleElement,
    gens: &[ModuleElement],
    order: ModuleOrder,
    field: &PrimeField,
) -> bool {
    let leads: Vec<(usize, Monomial, u32)> =
        gens.iter().map(|g| leading_data(g, order)).collect();
    let mut work = f.clone();
    'outer: while let Some((pos, mono, coeff)) = work
        .leading_term(order)
        .map(|(p, m, c)| (p, m.clone(), c))
    {
        for (gi, (lpos, lmono, lc)) in leads.iter().enumerate() {
            if *lpos == pos {
                if let Some(q) = lmono.quotient_into(&mono) {
                    let scale = field.div(coeff, *lc);
                    let sub = gens[gi].mul_term(field, &q, scale);
                    work = work.sub(field, &sub);
                    continue 'outer;
                }
            }
        }
        return false;
    }
    true
}

/// Membership of `f` in the submodule presented by a Groebner basis.
pub fn is_member(f: &ModuleElement, basis: &GroebnerBasis) -> bool {
    top_reduces_to_zero(f, &basis.gens, basis.order, &basis.field)
}

fn make_monic(e: &ModuleElement, order: ModuleOrder, field: &PrimeField) -> ModuleElement {
    match e.leading_term(order) {
        Some((_, _, c)) if c != 1 => e.scale(field, field.inv(c)),
        _ => e.clone(),
    }
}

/// Incremental Buchberger engine: generators may be added in batches, and
/// membership can be queried between batches. The basis is a (not
/// necessarily reduced) Groebner basis of the span after every `saturate`.
pub(crate) struct GbEngine {
    field: PrimeField,
    twists: Vec<i64>,
    order: ModuleOrder,
    basis: Vec<ModuleElement>,
    // Leading data per basis element.
    leads: Vec<(usize, Monomial, u32)>,
    // Indices of basis elements grouped by leading position.
    by_pos: Vec<Vec<usize>>,
    pending: BTreeSet<(i64, usize, usize)>,
    pending_set: std::collections::HashSet<(usize, usize)>,
}

impl GbEngine {
    pub(crate) fn new(field: PrimeField, twists: Vec<i64>, order: ModuleOrder) -> Self {
        let rank = twists.len();
        GbEngine {
            field,
            twists,
            order,
            basis: Vec::new(),
            leads: Vec::new(),
            by_pos: vec![Vec::new(); rank],
            pending: BTreeSet::new(),
            pending_set: std::collections::HashSet::new(),
        }
    }

    /// Insert elements already known to form a Groebner basis of their own
    /// span: no pairs among them are scheduled. Sound only before any other
    /// generators have been added.
    pub(crate) fn seed_known_basis(&mut self, gens: &[ModuleElement]) {
        debug_assert!(self.pending.is_empty());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let g = make_monic(g, self.order, &self.field);
            self.push_element(g, false);
        }
    }

    fn push_element(&mut self, g: ModuleElement, make_pairs: bool) {
        let idx = self.basis.len();
        let (pos, mono, c) = g.leading_term(self.order).expect("nonzero");
        let lead = (pos, mono.clone(), c);
        if make_pairs {
            for &k in &self.by_pos[pos] {
                let d = self.leads[k].1.lcm(&lead.1).degree() as i64 + self.twists[pos];
                self.pending.insert((d, k, idx));
                self.pending_set.insert((k, idx));
            }
        }
        self.by_pos[pos].push(idx);
        self.leads.push(lead);
        self.basis.push(g);
    }

    fn push_with_pairs(&mut self, g: ModuleElement) {
        self.push_element(g, true);
    }

    /// Full normal form against the current basis.
    fn reduce(&self, f: &ModuleElement) -> ModuleElement {
        let rank = f.rank();
        let mut work = f.clone();
        let mut done = ModuleElement::zero(rank);
        'outer: while let Some((pos, mono, coeff)) = work
            .leading_term(self.order)
            .map(|(p, m, c)| (p, m.clone(), c))
        {
            for &gi in &self.by_pos[pos] {
                let (_, lmono, lc) = &self.leads[gi];
                if let Some(q) = lmono.quotient_into(&mono) {
                    let scale = self.field.div(coeff, *lc);
                    let sub = self.basis[gi].mul_term(&self.field, &q, scale);
                    work = work.sub(&self.field, &sub);
                    continue 'outer;
                }
            }
            let head = ModuleElement::from_poly(rank, pos, Polynomial::term(mono, coeff));
            done = done.add(&self.field, &head);
            work = work.sub(&self.field, &head);
        }
        done
    }

    pub(crate) fn is_member(&self, f: &ModuleElement) -> bool {
        let mut work = f.clone();
        'outer: while let Some((pos, mono, coeff)) = work
            .leading_term(self.order)
            .map(|(p, m, c)| (p, m.clone(), c))
        {
            for &gi in &self.by_pos[pos] {
                let (_, lmono, lc) = &self.leads[gi];
                if let Some(q) = lmono.quotient_into(&mono) {
                    let scale = self.field.div(coeff, *lc);
                    let sub = self.basis[gi].mul_term(&self.field, &q, scale);
                    work = work.sub(&self.field, &sub);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    pub(crate) fn add_generators(&mut self, gens: &[ModuleElement]) {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let g = make_monic(g, self.order, &self.field);
            self.push_with_pairs(g);
        }
        self.saturate();
    }

    /// Chain criterion: pair (i, j) may be skipped if some k with the same
    /// leading position divides the pair lcm and both (i, k) and (j, k) have
    /// already been treated.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial, pos: usize) -> bool {
        for &k in &self.by_pos[pos] {
            if k == i || k == j {
                continue;
            }
            if !self.leads[k].1.divides(lcm) {
                continue;
            }
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            if !self.pending_set.contains(&a) && !self.pending_set.contains(&b) {
                return true;
            }
        }
        false
    }

    /// Normal selection strategy: lowest S-pair degree, then index order.
    pub(crate) fn saturate(&mut self) {
        while let Some(&(d, i, j)) = self.pending.iter().next() {
            self.pending.remove(&(d, i, j));
            self.pending_set.remove(&(i, j));
            let (pos, mi, _) = &self.leads[i];
            let (_, mj, _) = &self.leads[j];
            let lcm = mi.lcm(mj);
            if self.chain_criterion(i, j, &lcm, *pos) {
                continue;
            }
            let qi = mi.quotient_into(&lcm).unwrap();
            let qj = mj.quotient_into(&lcm).unwrap();
            let s = self.basis[i]
                .mul_term(&self.field, &qi, 1)
                .sub(&self.field, &self.basis[j].mul_term(&self.field, &qj, 1));
            let r = self.reduce(&s);
            if !r.is_zero() {
                let r = make_monic(&r, self.order, &self.field);
                self.push_with_pairs(r);
            }
        }
    }

    pub(crate) fn into_reduced(self) -> GroebnerBasis {
        let gens = autoreduce(self.basis, self.order, &self.field, &self.twists);
        GroebnerBasis {
            field: self.field,
            twists: self.twists,
            order: self.order,
            gens,
            reduced: true,
        }
    }
}

/// Reduced Groebner basis of the submodule generated by `generators`.
///
/// Rejects non-homogeneous input, naming the offending entry. The output list
/// is sorted by (degree, leading term), so repeated runs are byte-identical.
pub fn buchberger(
    field: &PrimeField,
    twists: &[i64],
    order: ModuleOrder,
    generators: &[ModuleElement],
) -> Result<GroebnerBasis> {
    for (i, g) in generators.iter().enumerate() {
        g.check_rank(twists.len())?;
        if !g.is_homogeneous(twists) {
            return Err(Error::NonHomogeneous { index: i });
        }
    }
    let mut engine = GbEngine::new(*field, twists.to_vec(), order);
    engine.add_generators(generators);
    Ok(engine.into_reduced())
}

/// Drop generators with redundant leading terms, tail-reduce the survivors,
/// and sort canonically.
fn autoreduce(
    mut basis: Vec<ModuleElement>,
    order: ModuleOrder,
    field: &PrimeField,
    twists: &[i64],
) -> Vec<ModuleElement> {
    basis.sort_by(|a, b| a.cmp_canonical(b, twists, order));
    let mut kept: Vec<ModuleElement> = Vec::new();
    'next: for g in basis {
        let (pos, mono, _) = match g.leading_term(order) {
            Some(t) => (t.0, t.1.clone(), t.2),
            None => continue,
        };
        for h in &kept {
            let (hp, hm, _) = h.leading_term(order).unwrap();
            if hp == pos && hm.divides(&mono) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    // Tail-reduce each against the others; leading terms are pairwise
    // irredundant so they survive reduction.
    let snapshot = kept.clone();
    for i in 0..kept.len() {
        let others: Vec<ModuleElement> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e.clone())
            .collect();
        kept[i] = make_monic(&reduce_against(&kept[i], &others, order, field), order, field);
    }
    kept.sort_by(|a, b| a.cmp_canonical(b, twists, order));
    kept
}

/// Normal form modulo the submodule generated by `basis` together with
/// `defining * e_i` for every basis vector. Zero iff `f` lies in the submodule
/// over the quotient ring.
pub fn quotient_normal_form(
    f: &ModuleElement,
    basis: &GroebnerBasis,
    defining: &GroebnerBasis,
) -> ModuleElement {
    let field = basis.field;
    let rank = basis.rank();
    f.check_rank(rank).expect("rank mismatch in quotient_normal_form");
    let mut engine = GbEngine::new(field, basis.twists.clone(), basis.order);
    engine.seed_known_basis(&defining_times_units(defining, rank));
    engine.add_generators(&basis.gens);
    let gb = engine.into_reduced();
    normal_form(f, &gb)
}

fn defining_times_units(defining: &GroebnerBasis, rank: usize) -> Vec<ModuleElement> {
    let mut out = Vec::new();
    for q in defining.generators() {
        debug_assert_eq!(q.rank(), 1);
        let p = q.component(0).clone();
        for pos in 0..rank {
            out.push(ModuleElement::from_poly(rank, pos, p.clone()));
        }
    }
    out
}

/// Generators of `{ c in R^s : sum_i c_i f_i  in  span(untagged + seeded) }`,
/// where the span is taken over the polynomial ring. Quotient-ring kernels
/// are obtained by listing the defining ideal times each basis vector among
/// the context; `seeded` entries must form a Groebner basis of their own span
/// and are inserted without mutual pairs.
///
/// `tagged_twists[i]` declares the degree of `tagged[i]`; zero tagged entries
/// are allowed and contribute free kernel directions.
///
/// This is the Schreyer-style construction run through an elimination order on
/// the graph module `F + R^s`: basis elements whose `F`-part vanishes have
/// cofactor parts generating the kernel.
pub fn lift_kernel(
    field: &PrimeField,
    nvars: usize,
    ambient_twists: &[i64],
    tagged: &[ModuleElement],
    tagged_twists: &[i64],
    untagged: &[ModuleElement],
    seeded: &[ModuleElement],
) -> Vec<ModuleElement> {
    assert_eq!(tagged.len(), tagged_twists.len());
    let m = ambient_twists.len();
    let s = tagged.len();
    let mut twists: Vec<i64> = ambient_twists.to_vec();
    for (f, t) in tagged.iter().zip(tagged_twists) {
        debug_assert!(f.degree(ambient_twists).map_or(true, |d| d == *t));
        twists.push(*t);
    }
    let pad = |e: &ModuleElement| -> ModuleElement {
        let mut comps = e.components().to_vec();
        comps.extend(vec![Polynomial::zero(); s]);
        ModuleElement::from_components(comps)
    };
    let mut gens: Vec<ModuleElement> = Vec::new();
    for (i, f) in tagged.iter().enumerate() {
        let mut comps = f.components().to_vec();
        comps.extend(vec![Polynomial::zero(); s]);
        comps[m + i] = Polynomial::constant(nvars, 1);
        gens.push(ModuleElement::from_components(comps));
    }
    gens.extend(untagged.iter().map(pad));
    let mut engine = GbEngine::new(*field, twists, ModuleOrder::Block { split: m });
    let seeds: Vec<ModuleElement> = seeded.iter().map(pad).collect();
    engine.seed_known_basis(&seeds);
    engine.add_generators(&gens);
    let gb = engine.into_reduced();
    let mut out = Vec::new();
    for g in gb.generators() {
        if g.components()[..m].iter().all(|p| p.is_zero()) {
            out.push(ModuleElement::from_components(g.components()[m..].to_vec()));
        }
    }
    out
}

fn element_degrees(gens: &[ModuleElement], twists: &[i64]) -> Vec<i64> {
    gens.iter()
        .map(|g| g.degree(twists).unwrap_or(0))
        .collect()
}

/// Kernel of the map `R^m -> F` sending basis vector `i` to generator `i` of a
/// reduced Groebner basis, over the ambient polynomial ring.
pub fn syzygy_basis(basis: &GroebnerBasis, nvars: usize) -> Vec<ModuleElement> {
    let degs = element_degrees(&basis.gens, &basis.twists);
    lift_kernel(&basis.field, nvars, &basis.twists, &basis.gens, &degs, &[], &[])
}

/// Variant over the quotient ring: syzygies modulo `defining`.
pub fn syzygy_basis_over_quotient(
    basis: &GroebnerBasis,
    defining: &GroebnerBasis,
    nvars: usize,
) -> Vec<ModuleElement> {
    let units = defining_times_units(defining, basis.rank());
    let degs = element_degrees(&basis.gens, &basis.twists);
    lift_kernel(&basis.field, nvars, &basis.twists, &basis.gens, &degs, &[], &units)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn vars2() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn ideal_elem(src: &str, vars: &[String], f: &PrimeField) -> ModuleElement {
        ModuleElement::from_components(vec![Polynomial::parse(src, vars, f).unwrap()])
    }

    fn ideal_gb(srcs: &[&str], vars: &[String], f: &PrimeField) -> GroebnerBasis {
        let gens: Vec<ModuleElement> = srcs.iter().map(|s| ideal_elem(s, vars, f)).collect();
        buchberger(f, &[0], ModuleOrder::Top, &gens).unwrap()
    }

    #[test]
    fn normal_form_direct_divisibility() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2"], &vars, &f);
        let r = normal_form(&ideal_elem("x^2*y", &vars, &f), &gb);
        assert!(r.is_zero());
    }

    #[test]
    fn normal_form_irreducible() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2", "x*y"], &vars, &f);
        let y3 = ideal_elem("y^3", &vars, &f);
        assert_eq!(normal_form(&y3, &gb), y3);
    }

    #[test]
    fn normal_form_membership() {
        // x*(x*y + y^2) lies in (x^2, x*y + y^2, y^3).
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2", "x*y + y^2", "y^3"], &vars, &f);
        let r = normal_form(&ideal_elem("x^2*y + x*y^2", &vars, &f), &gb);
        assert!(r.is_zero());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2", "x*y + y^2"], &vars, &f);
        let e = ideal_elem("x^2*y + y^3 + x*y^2", &vars, &f);
        let r1 = normal_form(&e, &gb);
        let r2 = normal_form(&r1, &gb);
        assert_eq!(r1, r2);
    }

    #[test]
    fn buchberger_monomial_ideal_is_already_a_basis() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2", "x*y"], &vars, &f);
        assert_eq!(gb.generators().len(), 2);
    }

    #[test]
    fn buchberger_adds_the_missing_cubic() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2", "x*y + y^2"], &vars, &f);
        let rendered: Vec<String> = gb
            .generators()
            .iter()
            .map(|g| g.component(0).render(&vars))
            .collect();
        assert_eq!(rendered, vec!["x^2", "x*y + y^2", "y^3"]);
    }

    #[test]
    fn buchberger_three_variable_monomials() {
        let f = field();
        let vars = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        let gb = ideal_gb(&["x*y", "x*z"], &vars, &f);
        assert_eq!(gb.generators().len(), 2);
    }

    #[test]
    fn buchberger_rejects_inhomogeneous_input() {
        let f = field();
        let vars = vars2();
        let bad = ideal_elem("x^2 + y", &vars, &f);
        let err = buchberger(&f, &[0], ModuleOrder::Top, &[bad]).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneous { index: 0 }));
    }

    #[test]
    fn buchberger_is_deterministic() {
        let f = field();
        let vars = vars2();
        let a = ideal_gb(&["x^2 + y^2", "x*y"], &vars, &f);
        let b = ideal_gb(&["x^2 + y^2", "x*y"], &vars, &f);
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn syzygy_of_koszul_pair() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x", "y"], &vars, &f);
        let syz = syzygy_basis(&gb, 2);
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // (-y, x) up to scalar: components must be multiples of y and x.
        let c0 = s.component(0).render(&vars);
        let c1 = s.component(1).render(&vars);
        assert!(c0.contains('y') && c1.contains('x'), "got ({c0}, {c1})");
    }

    #[test]
    fn principal_ideal_over_domain_has_no_syzygies() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2"], &vars, &f);
        assert!(syzygy_basis(&gb, 2).is_empty());
    }

    #[test]
    fn syzygies_of_the_maximal_ideal_over_a_quotient() {
        // Over R1 = k[x,y]/(x^2, x*y), syz(x, y) is generated by
        // (x,0), (y,0), (0,x).
        let f = field();
        let vars = vars2();
        let defining = ideal_gb(&["x^2", "x*y"], &vars, &f);
        let gens = ideal_gb(&["x", "y"], &vars, &f);
        let syz = syzygy_basis_over_quotient(&gens, &defining, 2);
        let expected: Vec<ModuleElement> = [("x", "0"), ("y", "0"), ("0", "x")]
            .iter()
            .map(|(a, b)| {
                ModuleElement::from_components(vec![
                    Polynomial::parse(a, &vars, &f).unwrap(),
                    Polynomial::parse(b, &vars, &f).unwrap(),
                ])
            })
            .collect();
        // Same span over R1: check membership in both directions.
        let twists = [1i64, 1];
        let units = defining_times_units(&defining, 2);
        let mut with_units = expected.clone();
        with_units.extend(units.iter().cloned());
        let gb_expected = buchberger(&f, &twists, ModuleOrder::Top, &with_units).unwrap();
        for s in &syz {
            assert!(normal_form(s, &gb_expected).is_zero(), "extra syzygy");
        }
        let mut syz_units = syz.clone();
        syz_units.extend(units);
        let gb_syz = buchberger(&f, &twists, ModuleOrder::Top, &syz_units).unwrap();
        for e in &expected {
            assert!(normal_form(e, &gb_syz).is_zero(), "missing syzygy");
        }
    }

    #[test]
    fn quotient_normal_form_examples() {
        let f = field();
        let vars = vars2();
        let defining = ideal_gb(&["x^2", "x*y"], &vars, &f);
        let empty = buchberger(&f, &[0], ModuleOrder::Top, &[]).unwrap();
        // x^2 lies in the ideal, y^2 does not.
        assert!(quotient_normal_form(&ideal_elem("x^2", &vars, &f), &empty, &defining).is_zero());
        let r = quotient_normal_form(&ideal_elem("y^2", &vars, &f), &empty, &defining);
        assert_eq!(r.component(0).render(&vars), "y^2");
        // (y^3, 0) reduces to zero against the syzygies of m over R1.
        let syz_gens: Vec<ModuleElement> = [("x", "0"), ("y", "0"), ("0", "x")]
            .iter()
            .map(|(a, b)| {
                ModuleElement::from_components(vec![
                    Polynomial::parse(a, &vars, &f).unwrap(),
                    Polynomial::parse(b, &vars, &f).unwrap(),
                ])
            })
            .collect();
        let basis = buchberger(&f, &[1, 1], ModuleOrder::Top, &syz_gens).unwrap();
        let e = ModuleElement::from_components(vec![
            Polynomial::parse("y^3", &vars, &f).unwrap(),
            Polynomial::zero(),
        ]);
        assert!(quotient_normal_form(&e, &basis, &defining).is_zero());
    }

    #[test]
    fn outputs_stay_homogeneous() {
        let f = field();
        let vars = vars2();
        let gb = ideal_gb(&["x^2 + y^2", "x*y"], &vars, &f);
        for g in gb.generators() {
            assert!(g.is_homogeneous(&[0]));
        }
        let r = normal_form(&ideal_elem("x^3 + y^3", &vars, &f), &gb);
        assert!(r.is_homogeneous(&[0]));
    }
}
