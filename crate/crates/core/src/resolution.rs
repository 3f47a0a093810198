//! Minimal graded free resolutions, Betti tables, and syzygy modules.

use crate::groebner::lift_kernel;
use crate::modelem::ModuleElement;
use crate::modules::{
    map_from_columns, minimal_generators, minimalize, HomogeneousMap, PresentedModule,
    TwistedFreeModule,
};
use crate::ring::RingDescriptor;
use std::collections::BTreeMap;

/// A minimal graded free resolution `F_L -> ... -> F_1 -> F_0 -> M -> 0`,
/// truncated at homological degree `L`.
#[derive(Debug, Clone)]
pub struct Resolution {
    ring: RingDescriptor,
    modules: Vec<TwistedFreeModule>,
    maps: Vec<HomogeneousMap>,
    target: PresentedModule,
}

impl Resolution {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// `F_0 ... F_L`.
    pub fn modules(&self) -> &[TwistedFreeModule] {
        &self.modules
    }

    pub fn free_module(&self, i: usize) -> &TwistedFreeModule {
        &self.modules[i]
    }

    /// `d_1 ... d_L`, with `d_i: F_i -> F_{i-1}`.
    pub fn maps(&self) -> &[HomogeneousMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &HomogeneousMap {
        &self.maps[i - 1]
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    /// The module resolved to this depth, presented by the truncation:
    /// the syzygy `coker(d_{n+1})` for `0 <= n < length`.
    pub fn syzygy_module(&self, n: usize) -> PresentedModule {
        assert!(n < self.maps.len(), "resolution too short for syzygy {n}");
        PresentedModule::new_minimal(self.ring.clone(), self.maps[n].clone())
    }

    /// Check `d_i . d_{i+1} = 0` and minimality of every entry.
    pub fn validate(&self) -> bool {
        for i in 0..self.maps.len() {
            for row in self.maps[i].entries() {
                for p in row {
                    if p.constant_value().is_some() {
                        return false;
                    }
                }
            }
            if i + 1 < self.maps.len() {
                let comp = self.maps[i]
                    .compose(&self.ring, &self.maps[i + 1])
                    .expect("chain maps compose");
                if !comp.is_zero_map() {
                    return false;
                }
            }
        }
        true
    }
}

/// Graded Betti numbers `b_{i,j}` read off a minimal resolution: `b_{i,j}`
/// counts generators of `F_i` in internal degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
    totals: Vec<usize>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    pub fn totals(&self) -> &[usize] {
        &self.totals
    }

    pub fn entry(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }
}

pub fn betti_table(res: &Resolution) -> BettiTable {
    let mut entries = BTreeMap::new();
    let mut totals = Vec::new();
    for (i, f) in res.modules.iter().enumerate() {
        totals.push(f.rank());
        for t in f.twists() {
            *entries.entry((i, *t)).or_insert(0) += 1;
        }
    }
    BettiTable { entries, totals }
}

/// Minimal graded free resolution of `M` over its ring, to homological degree
/// `length`. Deterministic: the syzygy generators at each step come from the
/// reduced Groebner basis in canonical order.
pub fn resolve(module: &PresentedModule, length: usize) -> Resolution {
    let ring = module.ring().clone();
    let min = minimalize(module);
    let mut modules = vec![min.generators().clone()];
    let mut maps: Vec<HomogeneousMap> = Vec::new();
    let mut current = min.presentation().clone();
    for step in 0..length {
        modules.push(current.source().clone());
        maps.push(current.clone());
        if step + 1 == length {
            break;
        }
        current = next_step(&ring, &current, false);
    }
    if length == 0 {
        // No maps requested; still a valid (trivial) truncation.
    }
    Resolution { ring, modules, maps, target: min }
}

fn next_step(ring: &RingDescriptor, d: &HomogeneousMap, over_ambient: bool) -> HomogeneousMap {
    let field = ring.field();
    if d.source().rank() == 0 {
        return HomogeneousMap::zero(TwistedFreeModule::new(vec![]), d.source().clone());
    }
    let cols = d.columns();
    let twists = d.source().twists().to_vec();
    let target_twists = d.target().twists();
    let col_degs: Vec<i64> = twists.clone();
    let seeded = if over_ambient {
        Vec::new()
    } else {
        ring.ideal_times_units(target_twists.len())
    };
    let syz = lift_kernel(
        field,
        ring.nvars(),
        target_twists,
        &cols,
        &col_degs,
        &[],
        &seeded,
    );
    let context_ring = if over_ambient { ring.ambient() } else { ring.clone() };
    let mins = minimal_generators(&context_ring, &twists, &syz, &[]);
    map_from_columns(&context_ring, d.source(), &mins)
}

/// The n-th syzygy module, presented minimally by the next resolution step.
pub fn syzygy(module: &PresentedModule, n: usize) -> PresentedModule {
    if n == 0 {
        return minimalize(module);
    }
    let res = resolve(module, n + 1);
    res.syzygy_module(n)
}

/// Minimal graded free resolution of `M` as a module over the ambient
/// polynomial ring; finite by Hilbert's syzygy theorem.
pub fn resolve_over_ambient(module: &PresentedModule) -> Resolution {
    let ring = module.ring();
    let ambient = ring.ambient();
    // Augment the presentation with the defining ideal acting on each
    // generator, then resolve over the polynomial ring.
    let mut cols = module.presentation().columns();
    let rank = module.generators().rank();
    for q in ring.ideal() {
        for pos in 0..rank {
            cols.push(ModuleElement::from_poly(rank, pos, q.clone()));
        }
    }
    let map = map_from_columns(&ambient, module.generators(), &cols);
    let as_s_module = PresentedModule::new(ambient.clone(), map).expect("homogeneous");
    let min = minimalize(&as_s_module);
    let mut modules = vec![min.generators().clone()];
    let mut maps: Vec<HomogeneousMap> = Vec::new();
    let mut current = min.presentation().clone();
    let bound = ambient.nvars() + 1;
    let mut step = 0;
    loop {
        modules.push(current.source().clone());
        maps.push(current.clone());
        if current.source().rank() == 0 {
            break;
        }
        step += 1;
        assert!(
            step <= bound,
            "ambient resolution failed to terminate within {bound} steps"
        );
        current = next_step(&ambient, &current, true);
    }
    Resolution { ring: ambient, modules, maps, target: min }
}

/// Minimal resolution of the residue field, cached on the ring.
pub fn resolution_of_residue_field(ring: &RingDescriptor, length: usize) -> Resolution {
    {
        let cache = ring.cached_res_k().lock().unwrap();
        if let Some(res) = cache.as_ref() {
            if res.length() >= length {
                return truncate(res, length);
            }
        }
    }
    let k = crate::modules::residue_field(ring);
    let res = resolve(&k, length);
    let mut cache = ring.cached_res_k().lock().unwrap();
    match cache.as_ref() {
        Some(prev) if prev.length() >= res.length() => truncate(prev, length),
        _ => {
            *cache = Some(res.clone());
            res
        }
    }
}

fn truncate(res: &Resolution, length: usize) -> Resolution {
    Resolution {
        ring: res.ring.clone(),
        modules: res.modules[..=length.min(res.modules.len() - 1)].to_vec(),
        maps: res.maps[..length.min(res.maps.len())].to_vec(),
        target: res.target.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::modules::{free_module, residue_field, zero_module};
    use crate::poly::Polynomial;

    fn ring(defs: &[&str], vars: &[&str]) -> RingDescriptor {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let f = PrimeField::new(32003).unwrap();
        let ideal = defs
            .iter()
            .map(|s| Polynomial::parse(s, &vars, &f).unwrap())
            .collect();
        RingDescriptor::new(32003, vars, ideal).unwrap()
    }

    #[test]
    fn koszul_resolution_over_the_plane() {
        let s = ring(&[], &["x", "y"]);
        let res = resolve(&residue_field(&s), 3);
        let b = betti_table(&res);
        assert_eq!(b.totals(), &[1, 2, 1, 0]);
        assert_eq!(b.entry(0, 0), 1);
        assert_eq!(b.entry(1, 1), 2);
        assert_eq!(b.entry(2, 2), 1);
        assert!(res.validate());
    }

    #[test]
    fn fibonacci_betti_numbers_over_r1() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let res = resolve(&residue_field(&r1), 4);
        let b = betti_table(&res);
        assert_eq!(b.totals(), &[1, 2, 3, 5, 8]);
        assert!(res.validate());
    }

    #[test]
    fn doubling_betti_numbers_over_r5() {
        let r5 = ring(&["x^2", "x*y", "y^2"], &["x", "y"]);
        let res = resolve(&residue_field(&r5), 4);
        assert_eq!(betti_table(&res).totals(), &[1, 2, 4, 8, 16]);
    }

    #[test]
    fn zero_module_resolves_to_nothing() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let res = resolve(&zero_module(&r1), 3);
        assert_eq!(betti_table(&res).totals(), &[0, 0, 0, 0]);
    }

    #[test]
    fn first_syzygy_of_k_over_the_plane_is_the_maximal_ideal() {
        let s = ring(&[], &["x", "y"]);
        let omega = syzygy(&residue_field(&s), 1);
        assert_eq!(omega.generators().rank(), 2);
        assert_eq!(omega.relation_count(), 1);
        assert_eq!(omega.generator_degrees(), &[1, 1]);
    }

    #[test]
    fn first_syzygy_of_k_over_r1() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let omega = syzygy(&residue_field(&r1), 1);
        assert_eq!(omega.generators().rank(), 2);
        assert_eq!(omega.relation_count(), 3);
    }

    #[test]
    fn syzygies_of_free_modules_vanish() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let f = free_module(&r1, vec![0, 2]);
        for n in 1..=3 {
            assert!(crate::modules::is_zero(&syzygy(&f, n)));
        }
    }

    #[test]
    fn syzygy_is_stable_under_iteration() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let k = residue_field(&r1);
        let a = syzygy(&syzygy(&k, 1), 1);
        let b = syzygy(&k, 2);
        let ba = betti_table(&resolve(&a, 3));
        let bb = betti_table(&resolve(&b, 3));
        assert_eq!(ba, bb);
    }

    #[test]
    fn ambient_resolution_of_r1() {
        // R1 as a module over S = k[x,y] resolves as S <- S(-2)^2 <- S(-3).
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let free = free_module(&r1, vec![0]);
        let res = resolve_over_ambient(&free);
        let b = betti_table(&res);
        assert_eq!(&b.totals()[..3], &[1, 2, 1]);
        assert_eq!(b.entry(1, 2), 2);
        assert_eq!(b.entry(2, 3), 1);
    }

    #[test]
    fn ambient_resolution_of_k_terminates_at_the_variable_count() {
        let s = ring(&[], &["x", "y"]);
        let res = resolve_over_ambient(&residue_field(&s));
        assert_eq!(betti_table(&res).totals(), &[1, 2, 1, 0]);
    }

    #[test]
    fn cached_resolution_of_k_extends() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let short = resolution_of_residue_field(&r1, 2);
        assert_eq!(short.length(), 2);
        let long = resolution_of_residue_field(&r1, 4);
        assert_eq!(betti_table(&long).totals(), &[1, 2, 3, 5, 8]);
        let short_again = resolution_of_residue_field(&r1, 2);
        assert_eq!(betti_table(&short_again).totals(), &[1, 2, 3]);
    }
}
