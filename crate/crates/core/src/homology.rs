//! Duals, the transpose, Ext modules, grade and depth, the torsionfree index,
//! syzygy order via universal pushforwards, and bounded total reflexivity.

use crate::error::Result;
use crate::groebner::lift_kernel;
use crate::modelem::ModuleElement;
use crate::modules::{
    free_module, hom_into_ring, is_zero, kernel_of_map, minimalize, subquotient, HomogeneousMap,
    ModuleHom, PresentedModule, TwistedFreeModule,
};
use crate::poly::Polynomial;
use crate::resolution::{resolution_of_residue_field, resolve, Resolution};
use crate::ring::RingDescriptor;
use std::cmp::Ordering;

/// Grade or depth value; `Infinite` is the zero-module convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Finite(usize),
    Infinite,
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Grade {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Grade::Infinite, Grade::Infinite) => Ordering::Equal,
            (Grade::Infinite, _) => Ordering::Greater,
            (_, Grade::Infinite) => Ordering::Less,
            (Grade::Finite(a), Grade::Finite(b)) => a.cmp(b),
        }
    }
}

/// Either an exact value below the cap, or "every index up to the cap passed".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapResult {
    Exact(usize),
    CapReached,
}

impl CapResult {
    pub fn at_least(&self, n: usize, cap: usize) -> bool {
        match self {
            CapResult::Exact(v) => *v >= n,
            CapResult::CapReached => cap >= n,
        }
    }

    pub fn exact_value(&self) -> Option<usize> {
        match self {
            CapResult::Exact(v) => Some(*v),
            CapResult::CapReached => None,
        }
    }
}

/// Hom(M, R) presented minimally.
pub fn dual(module: &PresentedModule) -> PresentedModule {
    let ring = module.ring();
    let covectors = hom_into_ring(module);
    let dual_twists: Vec<i64> = module.generator_degrees().iter().map(|t| -t).collect();
    subquotient(ring, &dual_twists, &covectors, &[])
}

/// The Auslander transpose: cokernel of the dualized minimal presentation.
pub fn transpose(module: &PresentedModule) -> PresentedModule {
    let min = if module.is_minimal() {
        module.clone()
    } else {
        minimalize(module)
    };
    let dualized = min.presentation().transpose();
    let m = PresentedModule::new(min.ring().clone(), dualized)
        .expect("transpose of a homogeneous map is homogeneous");
    minimalize(&m)
}

/// One cohomology slot of an Ext computation.
#[derive(Debug, Clone)]
pub struct ExtSlot {
    module: PresentedModule,
    vanishes: bool,
}

impl ExtSlot {
    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.vanishes
    }
}

/// `Ext^i(M, N)` for `0 <= i <= max_index`, each slot presented minimally.
#[derive(Debug, Clone)]
pub struct ExtProfile {
    base: PresentedModule,
    coefficient: PresentedModule,
    slots: Vec<ExtSlot>,
}

impl ExtProfile {
    pub fn base(&self) -> &PresentedModule {
        &self.base
    }

    pub fn coefficient(&self) -> &PresentedModule {
        &self.coefficient
    }

    pub fn max_index(&self) -> usize {
        self.slots.len() - 1
    }

    pub fn module(&self, i: usize) -> &PresentedModule {
        &self.slots[i].module
    }

    pub fn is_zero(&self, i: usize) -> bool {
        self.slots[i].vanishes
    }

    /// Total dimension over k, finite only when the slot has finite length.
    pub fn total_dimension(&self, i: usize) -> Option<usize> {
        crate::invariants::total_dimension(&self.slots[i].module)
    }

    /// Graded dimensions over the window `lo..=hi`.
    pub fn graded_dims(&self, i: usize, lo: i64, hi: i64) -> Vec<(i64, usize)> {
        let hs = crate::invariants::hilbert_series(&self.slots[i].module);
        (lo..=hi).map(|d| (d, hs.dimension_at(d))).collect()
    }
}

fn hom_twists(n_twists: &[i64], f: &TwistedFreeModule) -> Vec<i64> {
    let mut out = Vec::with_capacity(f.rank() * n_twists.len());
    for t in f.twists() {
        for s in n_twists {
            out.push(s - t);
        }
    }
    out
}

/// Relations of Hom(F, N): one block of N's relations per basis vector of F.
fn hom_relations(coefficient: &PresentedModule, f: &TwistedFreeModule) -> Vec<ModuleElement> {
    let field = coefficient.ring().field();
    let n0 = coefficient.generators().rank();
    let rank = f.rank() * n0;
    let mut out = Vec::new();
    for k in 0..f.rank() {
        for col in coefficient.presentation().columns() {
            let mut e = ModuleElement::zero(rank);
            for (a, p) in col.components().iter().enumerate() {
                if !p.is_zero() {
                    e = e.add(field, &ModuleElement::from_poly(rank, k * n0 + a, p.clone()));
                }
            }
            out.push(e);
        }
    }
    out
}

/// Columns of the induced map Hom(F_i, N) -> Hom(F_{i+1}, N): for source
/// generator (k, a) the component at (l, a) is d_{i+1}[k][l].
fn delta_columns(n0: usize, d_next: &HomogeneousMap) -> Vec<ModuleElement> {
    let fi_rank = d_next.target().rank();
    let fnext_rank = d_next.source().rank();
    let rank = fnext_rank * n0;
    let mut cols = Vec::with_capacity(fi_rank * n0);
    for k in 0..fi_rank {
        for a in 0..n0 {
            let mut comps = vec![Polynomial::zero(); rank];
            for l in 0..fnext_rank {
                comps[l * n0 + a] = d_next.entry(k, l).clone();
            }
            cols.push(ModuleElement::from_components(comps));
        }
    }
    cols
}

/// A single cohomology slot `Ext^i(M, N)` from a resolution of `M` of length
/// at least `i + 1`.
pub fn ext_single(res: &Resolution, coefficient: &PresentedModule, i: usize) -> PresentedModule {
    assert!(res.length() > i, "resolution too short for Ext^{i}");
    let ring = res.ring().clone();
    let field = ring.field();
    let n0 = coefficient.generators().rank();
    let n_twists = coefficient.generator_degrees().to_vec();
    let fi = res.free_module(i);
    let fnext = res.free_module(i + 1);
    let twists_i = hom_twists(&n_twists, fi);
    let twists_next = hom_twists(&n_twists, fnext);
    let delta = delta_columns(n0, res.map(i + 1));
    // Numerator: covector tuples killed by the next differential.
    let numerator = lift_kernel(
        field,
        ring.nvars(),
        &twists_next,
        &delta,
        &twists_i,
        &hom_relations(coefficient, fnext),
        &ring.ideal_times_units(twists_next.len()),
    );
    // Denominator: the previous differential's image plus the relations of
    // Hom(F_i, N).
    let mut rels = hom_relations(coefficient, fi);
    if i > 0 {
        rels.extend(delta_columns(n0, res.map(i)));
    }
    subquotient(&ring, &twists_i, &numerator, &rels)
}

/// Ext via a precomputed resolution of the base module; the resolution must
/// have length at least `max_index + 1`.
pub fn ext_from_resolution(
    res: &Resolution,
    coefficient: &PresentedModule,
    max_index: usize,
) -> ExtProfile {
    let mut slots = Vec::with_capacity(max_index + 1);
    for i in 0..=max_index {
        let module = ext_single(res, coefficient, i);
        let vanishes = is_zero(&module);
        slots.push(ExtSlot { module, vanishes });
    }
    ExtProfile {
        base: res.target().clone(),
        coefficient: coefficient.clone(),
        slots,
    }
}

/// `Ext^i(M, N)` for `i <= max_index`.
pub fn ext(base: &PresentedModule, coefficient: &PresentedModule, max_index: usize) -> ExtProfile {
    let res = resolve(base, max_index + 1);
    ext_from_resolution(&res, coefficient, max_index)
}

fn ring_as_module(ring: &RingDescriptor) -> PresentedModule {
    free_module(ring, vec![0])
}

/// Least `i` with `Ext^i(N, R) != 0`; infinite for the zero module.
pub fn grade(module: &PresentedModule) -> Grade {
    if is_zero(module) {
        return Grade::Infinite;
    }
    let ring = module.ring();
    let bound = ring.nvars();
    let r = ring_as_module(ring);
    for i in 0..=bound {
        let res = resolve(module, i + 1);
        if !is_zero(&ext_single(&res, &r, i)) {
            return Grade::Finite(i);
        }
    }
    // Nonzero modules have grade at most depth R <= number of variables.
    unreachable!("grade exceeded the variable count");
}

/// Depth with respect to the irrelevant maximal ideal, as the least `i` with
/// `Ext^i(k, M) != 0`; infinite for the zero module.
pub fn depth(module: &PresentedModule) -> Grade {
    if is_zero(module) {
        return Grade::Infinite;
    }
    let ring = module.ring();
    let bound = ring.nvars();
    for i in 0..=bound {
        let res_k = resolution_of_residue_field(ring, i + 1);
        if !is_zero(&ext_single(&res_k, module, i)) {
            return Grade::Finite(i);
        }
    }
    unreachable!("depth exceeded the variable count");
}

/// Torsionfree index: the largest `n <= cap` with `Ext^j(Tr M, R) = 0` for
/// `1 <= j <= n`, plus the first failing index as witness.
#[derive(Debug, Clone)]
pub struct TorsionfreeVerdict {
    pub index: CapResult,
    pub cap: usize,
    pub witness: Option<usize>,
}

impl TorsionfreeVerdict {
    pub fn at_least(&self, n: usize) -> bool {
        self.index.at_least(n, self.cap)
    }
}

pub fn tf_index(module: &PresentedModule, cap: usize) -> TorsionfreeVerdict {
    if is_zero(module) {
        return TorsionfreeVerdict { index: CapResult::CapReached, cap, witness: None };
    }
    let tr = transpose(module);
    if is_zero(&tr) || cap == 0 {
        return TorsionfreeVerdict { index: CapResult::CapReached, cap, witness: None };
    }
    let ring = module.ring();
    let r = ring_as_module(ring);
    for j in 1..=cap {
        let res = resolve(&tr, j + 1);
        if !is_zero(&ext_single(&res, &r, j)) {
            return TorsionfreeVerdict {
                index: CapResult::Exact(j - 1),
                cap,
                witness: Some(j),
            };
        }
    }
    TorsionfreeVerdict { index: CapResult::CapReached, cap, witness: None }
}

/// Syzygy order via the universal pushforward chain: at each step embed the
/// module into a free module by evaluating against the minimal generators of
/// its dual, and continue with the cokernel while the embedding is injective.
#[derive(Debug, Clone)]
pub struct SyzygyOrderVerdict {
    pub order: CapResult,
    pub cap: usize,
    /// Pushforward cokernels computed along the chain.
    pub chain: Vec<PresentedModule>,
}

impl SyzygyOrderVerdict {
    pub fn at_least(&self, n: usize) -> bool {
        self.order.at_least(n, self.cap)
    }
}

pub fn syzygy_order(module: &PresentedModule, cap: usize) -> SyzygyOrderVerdict {
    let ring = module.ring().clone();
    let mut current = minimalize(module);
    let mut chain = Vec::new();
    for step in 0..cap {
        if is_zero(&current) {
            return SyzygyOrderVerdict { order: CapResult::CapReached, cap, chain };
        }
        let covectors = hom_into_ring(&current);
        let target_twists: Vec<i64> = covectors
            .iter()
            .map(|v| {
                let dual_twists: Vec<i64> =
                    current.generator_degrees().iter().map(|t| -t).collect();
                -v.degree(&dual_twists).unwrap()
            })
            .collect();
        let target = free_module(&ring, target_twists);
        let rank_src = current.generators().rank();
        let entries: Vec<Vec<Polynomial>> = covectors
            .iter()
            .map(|v| (0..rank_src).map(|j| v.component(j).clone()).collect())
            .collect();
        let ev = ModuleHom::new(current.clone(), target.clone(), entries)
            .expect("evaluation map is well defined");
        let ker = kernel_of_map(&ev);
        if !is_zero(&ker) {
            return SyzygyOrderVerdict { order: CapResult::Exact(step), cap, chain };
        }
        // Cokernel of the embedding: the evaluation matrix is a presentation.
        let coker = minimalize(
            &PresentedModule::new(ring.clone(), ev.matrix().clone())
                .expect("evaluation matrix is homogeneous"),
        );
        chain.push(coker.clone());
        current = coker;
    }
    SyzygyOrderVerdict { order: CapResult::CapReached, cap, chain }
}

/// `Ext^i(M, R) = 0` for `1 <= i <= a` and `Ext^j(Tr M, R) = 0` for
/// `1 <= j <= b`.
pub fn gab_membership(module: &PresentedModule, a: usize, b: usize) -> bool {
    let ring = module.ring();
    let r = ring_as_module(ring);
    if a > 0 {
        let res = resolve(module, a + 1);
        if (1..=a).any(|i| !is_zero(&ext_single(&res, &r, i))) {
            return false;
        }
    }
    if b > 0 {
        let tr = transpose(module);
        if !is_zero(&tr) {
            let res = resolve(&tr, b + 1);
            if (1..=b).any(|j| !is_zero(&ext_single(&res, &r, j))) {
                return false;
            }
        }
    }
    true
}

/// Necessary-condition test for total reflexivity: both vanishing ranges up to
/// the bound. A `true` verdict is evidence, not a proof, of membership in the
/// unbounded class.
pub fn totally_reflexive_up_to(module: &PresentedModule, bound: usize) -> bool {
    assert!(bound >= 1);
    gab_membership(module, bound, bound)
}

/// Convenience: the syzygy module with free summands split off is not needed
/// for verdicts, but stable comparisons use equal Betti tables after
/// splitting.
pub fn stable_betti_totals(module: &PresentedModule, length: usize) -> Result<Vec<usize>> {
    let (_, residual) = crate::modules::split_free_summands(module);
    let res = resolve(&residual, length);
    Ok(crate::resolution::betti_table(&res).totals().to_vec())
}
