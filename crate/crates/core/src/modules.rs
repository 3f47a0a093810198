//! Finitely presented graded modules over `R = S/I`.
//!
//! A module is the cokernel of a homogeneous matrix between twisted free
//! modules. This file provides minimal presentations, kernels of maps, direct
//! sums, free-summand splitting, and the subquotient constructor everything
//! else is built from.

use crate::error::{Error, Result};
use crate::groebner::{is_member, lift_kernel, GbEngine, GroebnerBasis};
use crate::modelem::{ModuleElement, ModuleOrder};
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;

/// A free module with a degree twist per generator; generator `i` sits in
/// degree `twists[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedFreeModule {
    twists: Vec<i64>,
}

impl TwistedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        TwistedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Twists negated: the dual of `R(-a)` is `R(a)`.
    pub fn dual(&self) -> TwistedFreeModule {
        TwistedFreeModule { twists: self.twists.iter().map(|t| -t).collect() }
    }
}

/// A homogeneous matrix: entry `(i, j)` maps source generator `j` into target
/// generator `i`, and is zero or homogeneous of degree
/// `source.twists[j] - target.twists[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousMap {
    source: TwistedFreeModule,
    target: TwistedFreeModule,
    entries: Vec<Vec<Polynomial>>,
}

impl HomogeneousMap {
    pub fn new(
        source: TwistedFreeModule,
        target: TwistedFreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let map = HomogeneousMap { source, target, entries };
        map.validate()?;
        Ok(map)
    }

    pub fn zero(source: TwistedFreeModule, target: TwistedFreeModule) -> Self {
        let entries = vec![vec![Polynomial::zero(); source.rank()]; target.rank()];
        HomogeneousMap { source, target, entries }
    }

    fn validate(&self) -> Result<()> {
        if self.entries.len() != self.target.rank() {
            return Err(Error::RankMismatch {
                expected: self.target.rank(),
                found: self.entries.len(),
            });
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.source.rank() {
                return Err(Error::RankMismatch {
                    expected: self.source.rank(),
                    found: row.len(),
                });
            }
            for (j, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source.twists()[j] - self.target.twists()[i];
                if !p.is_homogeneous() || p.degree().map(i64::from) != Some(want) {
                    return Err(Error::NonHomogeneous { index: j });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &TwistedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &TwistedFreeModule {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    /// Column `j` as an element of the target free module.
    pub fn column(&self, j: usize) -> ModuleElement {
        ModuleElement::from_components(
            self.entries.iter().map(|row| row[j].clone()).collect(),
        )
    }

    pub fn columns(&self) -> Vec<ModuleElement> {
        (0..self.source.rank()).map(|j| self.column(j)).collect()
    }

    /// Apply to an element of the source free module.
    pub fn apply(&self, ring: &RingDescriptor, v: &ModuleElement) -> ModuleElement {
        let field = ring.field();
        let mut acc = ModuleElement::zero(self.target.rank());
        for (j, col) in self.columns().iter().enumerate() {
            let coeff = v.component(j);
            if coeff.is_zero() {
                continue;
            }
            for (m, c) in coeff.terms() {
                acc = acc.add(field, &col.mul_term(field, m, *c));
            }
        }
        acc
    }

    /// `self` after `other`; sources and targets must be compatible.
    pub fn compose(&self, ring: &RingDescriptor, other: &HomogeneousMap) -> Result<HomogeneousMap> {
        if other.target != self.source {
            return Err(Error::RankMismatch {
                expected: self.source.rank(),
                found: other.target.rank(),
            });
        }
        let cols: Vec<ModuleElement> = other
            .columns()
            .iter()
            .map(|c| ring.reduce_element(&self.apply(ring, c)))
            .collect();
        let entries = (0..self.target.rank())
            .map(|i| (0..other.source.rank()).map(|j| cols[j].component(i).clone()).collect())
            .collect();
        HomogeneousMap::new(other.source.clone(), self.target.clone(), entries)
    }

    pub fn transpose(&self) -> HomogeneousMap {
        let entries = (0..self.source.rank())
            .map(|j| (0..self.target.rank()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        HomogeneousMap {
            source: self.target.dual(),
            target: self.source.dual(),
            entries,
        }
    }

    pub fn is_zero_map(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_zero())
    }
}

/// Build a map whose columns are the given elements of `target`; the source
/// twist of each column is its degree (zero columns are dropped).
pub fn map_from_columns(
    ring: &RingDescriptor,
    target: &TwistedFreeModule,
    cols: &[ModuleElement],
) -> HomogeneousMap {
    let cols: Vec<ModuleElement> = cols
        .iter()
        .map(|c| ring.reduce_element(c))
        .filter(|c| !c.is_zero())
        .collect();
    let twists: Vec<i64> = cols
        .iter()
        .map(|c| c.degree(target.twists()).unwrap())
        .collect();
    let entries = (0..target.rank())
        .map(|i| cols.iter().map(|c| c.component(i).clone()).collect())
        .collect();
    HomogeneousMap {
        source: TwistedFreeModule::new(twists),
        target: target.clone(),
        entries,
    }
}

/// A graded module presented as the cokernel of a homogeneous map.
#[derive(Debug, Clone)]
pub struct PresentedModule {
    ring: RingDescriptor,
    presentation: HomogeneousMap,
    minimal: bool,
}

impl PresentedModule {
    pub fn new(ring: RingDescriptor, presentation: HomogeneousMap) -> Result<Self> {
        presentation.validate()?;
        let presentation = reduce_map(&ring, &presentation);
        Ok(PresentedModule { ring, presentation, minimal: false })
    }

    pub(crate) fn new_minimal(ring: RingDescriptor, presentation: HomogeneousMap) -> Self {
        PresentedModule { ring, presentation, minimal: true }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn presentation(&self) -> &HomogeneousMap {
        &self.presentation
    }

    /// Free module on the generators.
    pub fn generators(&self) -> &TwistedFreeModule {
        self.presentation.target()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        self.presentation.target().twists()
    }

    pub fn relation_count(&self) -> usize {
        self.presentation.source().rank()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Groebner basis over `R` of the relation submodule.
    pub fn relation_gb(&self) -> GroebnerBasis {
        self.ring
            .module_gb(self.generator_degrees(), &self.presentation.columns())
            .expect("presentation columns are homogeneous")
    }

    /// Is the given element of the generator free module zero in the module?
    pub fn element_is_zero(&self, v: &ModuleElement, gb: &GroebnerBasis) -> bool {
        is_member(v, gb)
    }
}

fn reduce_map(ring: &RingDescriptor, map: &HomogeneousMap) -> HomogeneousMap {
    let entries = map
        .entries
        .iter()
        .map(|row| row.iter().map(|p| ring.reduce_poly(p)).collect())
        .collect();
    HomogeneousMap {
        source: map.source.clone(),
        target: map.target.clone(),
        entries,
    }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

pub fn free_module(ring: &RingDescriptor, twists: Vec<i64>) -> PresentedModule {
    let target = TwistedFreeModule::new(twists);
    let map = HomogeneousMap::zero(TwistedFreeModule::new(vec![]), target);
    PresentedModule::new_minimal(ring.clone(), map)
}

pub fn zero_module(ring: &RingDescriptor) -> PresentedModule {
    free_module(ring, vec![])
}

/// The residue field `k = R/m` as a module: one generator in degree 0 with the
/// variables as relations.
pub fn residue_field(ring: &RingDescriptor) -> PresentedModule {
    let n = ring.nvars();
    let target = TwistedFreeModule::new(vec![0]);
    let source = TwistedFreeModule::new(vec![1; n]);
    let entries = vec![(0..n).map(|i| Polynomial::var(n, i)).collect()];
    PresentedModule::new_minimal(ring.clone(), HomogeneousMap { source, target, entries })
}

/// The irrelevant maximal ideal as a module.
pub fn irrelevant_ideal(ring: &RingDescriptor) -> PresentedModule {
    let n = ring.nvars();
    let gens: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
    ideal_module(ring, &gens)
}

/// A homogeneous ideal `(f_1, ..., f_s)` viewed as a submodule of `R`.
pub fn ideal_module(ring: &RingDescriptor, gens: &[Polynomial]) -> PresentedModule {
    let elems: Vec<ModuleElement> = gens
        .iter()
        .map(|p| ModuleElement::from_components(vec![p.clone()]))
        .collect();
    subquotient(ring, &[0], &elems, &[])
}

/// The cyclic quotient `R/(f_1, ..., f_s)`.
pub fn cyclic_quotient(ring: &RingDescriptor, gens: &[Polynomial]) -> PresentedModule {
    let elems: Vec<ModuleElement> = gens
        .iter()
        .map(|p| ModuleElement::from_components(vec![p.clone()]))
        .collect();
    let target = TwistedFreeModule::new(vec![0]);
    let map = map_from_columns(ring, &target, &elems);
    minimalize(&PresentedModule { ring: ring.clone(), presentation: map, minimal: false })
}

// ---------------------------------------------------------------------------
// Minimal generators and subquotients
// ---------------------------------------------------------------------------

/// Greedy minimal generating set of `span(gens)` modulo `span(context)`, both
/// over the quotient ring. Processing in increasing degree makes the survivor
/// set minimal by the graded Nakayama lemma.
pub fn minimal_generators(
    ring: &RingDescriptor,
    twists: &[i64],
    gens: &[ModuleElement],
    context: &[ModuleElement],
) -> Vec<ModuleElement> {
    let field = ring.field();
    let mut sorted: Vec<ModuleElement> = gens
        .iter()
        .map(|g| ring.reduce_element(g))
        .filter(|g| !g.is_zero())
        .collect();
    sorted.sort_by(|a, b| a.cmp_canonical(b, twists, ModuleOrder::Top));
    sorted.dedup();

    let mut engine = GbEngine::new(*field, twists.to_vec(), ModuleOrder::Top);
    engine.seed_known_basis(&ring.ideal_times_units(twists.len()));
    engine.add_generators(context);
    let mut kept = Vec::new();
    for g in sorted {
        if engine.is_member(&g) {
            continue;
        }
        // Keep a monic representative so presentations are canonical.
        let g = match g.leading_term(ModuleOrder::Top) {
            Some((_, _, c)) if c != 1 => g.scale(field, field.inv(c)),
            _ => g,
        };
        kept.push(g.clone());
        engine.add_generators(std::slice::from_ref(&g));
    }
    kept
}

/// Present `(span(gens) + span(rels)) / span(rels)` inside the twisted free
/// module, with minimal generators and minimal relations.
pub fn subquotient(
    ring: &RingDescriptor,
    ambient_twists: &[i64],
    gens: &[ModuleElement],
    rels: &[ModuleElement],
) -> PresentedModule {
    subquotient_with_embedding(ring, ambient_twists, gens, rels).0
}

/// As `subquotient`, additionally returning the kept generators as elements of
/// the ambient free module.
pub fn subquotient_with_embedding(
    ring: &RingDescriptor,
    ambient_twists: &[i64],
    gens: &[ModuleElement],
    rels: &[ModuleElement],
) -> (PresentedModule, Vec<ModuleElement>) {
    let field = ring.field();
    let kept = minimal_generators(ring, ambient_twists, gens, rels);
    let kept_twists: Vec<i64> = kept
        .iter()
        .map(|g| g.degree(ambient_twists).unwrap())
        .collect();
    let raw_rels = lift_kernel(
        field,
        ring.nvars(),
        ambient_twists,
        &kept,
        &kept_twists,
        rels,
        &ring.ideal_times_units(ambient_twists.len()),
    );
    let min_rels = minimal_generators(ring, &kept_twists, &raw_rels, &[]);
    let target = TwistedFreeModule::new(kept_twists);
    let map = map_from_columns(ring, &target, &min_rels);
    (PresentedModule::new_minimal(ring.clone(), map), kept)
}

// ---------------------------------------------------------------------------
// Minimalization
// ---------------------------------------------------------------------------

/// Isomorphic module whose presentation has all entries in the irrelevant
/// maximal ideal and no redundant generator or relation. Idempotent.
pub fn minimalize(module: &PresentedModule) -> PresentedModule {
    let ring = module.ring.clone();
    let field = *ring.field();
    let mut gen_twists = module.generators().twists().to_vec();
    let mut rel_twists = module.presentation.source().twists().to_vec();
    let mut entries: Vec<Vec<Polynomial>> = module
        .presentation
        .entries
        .iter()
        .map(|row| row.iter().map(|p| ring.reduce_poly(p)).collect())
        .collect();

    // Gaussian elimination on unit entries: a constant entry says generator i0
    // is a combination of the others.
    loop {
        let mut pivot = None;
        'scan: for j in 0..rel_twists.len() {
            for i in 0..gen_twists.len() {
                if let Some(c) = entries[i][j].constant_value() {
                    pivot = Some((i, j, c));
                    break 'scan;
                }
            }
        }
        let Some((i0, j0, c)) = pivot else { break };
        let cinv = field.inv(c);
        let pivot_col: Vec<Polynomial> = (0..gen_twists.len())
            .map(|i| entries[i][j0].clone())
            .collect();
        for j in 0..rel_twists.len() {
            if j == j0 {
                continue;
            }
            let factor = entries[i0][j].scale(&field, cinv);
            if factor.is_zero() {
                continue;
            }
            for i in 0..gen_twists.len() {
                if i == i0 {
                    continue;
                }
                let delta = pivot_col[i].mul(&field, &factor);
                entries[i][j] = ring.reduce_poly(&entries[i][j].sub(&field, &delta));
            }
        }
        entries.remove(i0);
        gen_twists.remove(i0);
        for row in &mut entries {
            row.remove(j0);
        }
        rel_twists.remove(j0);
    }

    // Drop zero columns, then keep a minimal generating set of the relations.
    let target = TwistedFreeModule::new(gen_twists.clone());
    let cols: Vec<ModuleElement> = (0..rel_twists.len())
        .map(|j| {
            ModuleElement::from_components(entries.iter().map(|row| row[j].clone()).collect())
        })
        .filter(|c| !c.is_zero())
        .collect();
    let min_cols = minimal_generators(&ring, &gen_twists, &cols, &[]);
    let map = map_from_columns(&ring, &target, &min_cols);
    PresentedModule::new_minimal(ring, map)
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// True iff the presentation columns generate the whole target over `R`.
pub fn is_zero(module: &PresentedModule) -> bool {
    let rank = module.generators().rank();
    if rank == 0 {
        return true;
    }
    let gb = module.relation_gb();
    let n = module.ring.nvars();
    (0..rank).all(|i| {
        let e = ModuleElement::unit(rank, i, n);
        module.element_is_zero(&e, &gb)
    })
}

/// True iff minimalization leaves no relations.
pub fn is_free(module: &PresentedModule) -> bool {
    let m = if module.minimal { module.clone() } else { minimalize(module) };
    m.relation_count() == 0
}

// ---------------------------------------------------------------------------
// Direct sum
// ---------------------------------------------------------------------------

pub fn direct_sum(a: &PresentedModule, b: &PresentedModule) -> Result<PresentedModule> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let mut gen_twists = a.generator_degrees().to_vec();
    gen_twists.extend_from_slice(b.generator_degrees());
    let mut rel_twists = a.presentation.source().twists().to_vec();
    rel_twists.extend_from_slice(b.presentation.source().twists());
    let (ra, ca) = (a.generators().rank(), a.relation_count());
    let (rb, cb) = (b.generators().rank(), b.relation_count());
    let mut entries = vec![vec![Polynomial::zero(); ca + cb]; ra + rb];
    for i in 0..ra {
        for j in 0..ca {
            entries[i][j] = a.presentation.entries[i][j].clone();
        }
    }
    for i in 0..rb {
        for j in 0..cb {
            entries[ra + i][ca + j] = b.presentation.entries[i][j].clone();
        }
    }
    let map = HomogeneousMap {
        source: TwistedFreeModule::new(rel_twists),
        target: TwistedFreeModule::new(gen_twists),
        entries,
    };
    Ok(PresentedModule {
        ring: a.ring.clone(),
        presentation: map,
        minimal: a.minimal && b.minimal,
    })
}

pub fn direct_power(m: &PresentedModule, copies: usize) -> PresentedModule {
    let mut acc = zero_module(&m.ring);
    for _ in 0..copies {
        acc = direct_sum(&acc, m).expect("same ring");
    }
    acc
}

// ---------------------------------------------------------------------------
// Maps between presented modules
// ---------------------------------------------------------------------------

/// A degree-zero homomorphism given on generators.
#[derive(Debug, Clone)]
pub struct ModuleHom {
    source: PresentedModule,
    target: PresentedModule,
    matrix: HomogeneousMap,
}

impl ModuleHom {
    /// `matrix` maps the generator free module of `source` to that of
    /// `target`. Fails unless every relation of the source lands in the
    /// relation submodule of the target.
    pub fn new(
        source: PresentedModule,
        target: PresentedModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        let matrix = HomogeneousMap::new(
            source.generators().clone(),
            target.generators().clone(),
            entries,
        )?;
        let gb = target.relation_gb();
        for (idx, col) in source.presentation.columns().iter().enumerate() {
            let image = matrix.apply(&source.ring, col);
            if !target.element_is_zero(&image, &gb) {
                return Err(Error::IllDefinedMap { index: idx });
            }
        }
        Ok(ModuleHom { source, target, matrix })
    }

    pub fn identity(m: &PresentedModule) -> Self {
        let rank = m.generators().rank();
        let n = m.ring.nvars();
        let entries = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            Polynomial::constant(n, 1)
                        } else {
                            Polynomial::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        ModuleHom {
            source: m.clone(),
            target: m.clone(),
            matrix: HomogeneousMap {
                source: m.generators().clone(),
                target: m.generators().clone(),
                entries,
            },
        }
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn matrix(&self) -> &HomogeneousMap {
        &self.matrix
    }
}

/// Kernel of a degree-zero homomorphism, presented minimally.
pub fn kernel_of_map(f: &ModuleHom) -> PresentedModule {
    kernel_with_embedding(f).0
}

/// Kernel plus its generators as vectors over the source generator module.
pub fn kernel_with_embedding(f: &ModuleHom) -> (PresentedModule, Vec<ModuleElement>) {
    let ring = f.source.ring.clone();
    let field = ring.field();
    let src_twists = f.source.generator_degrees().to_vec();
    let tgt_twists = f.target.generator_degrees().to_vec();
    // Numerator: vectors over the source generators whose image lies in the
    // target relations.
    let tagged = f.matrix.columns();
    let numerator = lift_kernel(
        field,
        ring.nvars(),
        &tgt_twists,
        &tagged,
        &src_twists,
        &f.target.presentation.columns(),
        &ring.ideal_times_units(tgt_twists.len()),
    );
    subquotient_with_embedding(
        &ring,
        &src_twists,
        &numerator,
        &f.source.presentation.columns(),
    )
}

// ---------------------------------------------------------------------------
// Hom into the ring, and free-summand splitting
// ---------------------------------------------------------------------------

/// Minimal generators of `Hom(M, R)` as covectors over the generators of `M`:
/// covector `v` sends generator `i` to `v_i`.
pub fn hom_into_ring(module: &PresentedModule) -> Vec<ModuleElement> {
    let ring = &module.ring;
    let field = ring.field();
    let a0 = module.generators().rank();
    let a1 = module.relation_count();
    let dual_gen_twists: Vec<i64> =
        module.generator_degrees().iter().map(|t| -t).collect();
    let dual_rel_twists: Vec<i64> = module
        .presentation
        .source()
        .twists()
        .iter()
        .map(|t| -t)
        .collect();
    // Row i of the presentation, viewed in the dualized relation module.
    let tagged: Vec<ModuleElement> = (0..a0)
        .map(|i| {
            ModuleElement::from_components(
                (0..a1)
                    .map(|j| module.presentation.entries[i][j].clone())
                    .collect(),
            )
        })
        .collect();
    let kernel = lift_kernel(
        field,
        ring.nvars(),
        &dual_rel_twists,
        &tagged,
        &dual_gen_twists,
        &[],
        &ring.ideal_times_units(a1),
    );
    minimal_generators(ring, &dual_gen_twists, &kernel, &[])
}

/// Split off the largest free direct summand, by the trace-ideal test: some
/// generator of `Hom(M, R)` takes a unit value on some generator of `M`.
pub fn split_free_summands(module: &PresentedModule) -> (TwistedFreeModule, PresentedModule) {
    let ring = module.ring.clone();
    let field = *ring.field();
    let mut cur = if module.minimal { module.clone() } else { minimalize(module) };
    let mut free_twists: Vec<i64> = Vec::new();
    loop {
        if cur.generators().rank() == 0 {
            break;
        }
        let homs = hom_into_ring(&cur);
        let mut split_at: Option<(ModuleElement, usize)> = None;
        'search: for v in &homs {
            for i in 0..cur.generators().rank() {
                if let Some(c) = v.component(i).constant_value() {
                    let scaled = v.scale(&field, field.inv(c));
                    split_at = Some((scaled, i));
                    break 'search;
                }
            }
        }
        let Some((v, i)) = split_at else { break };
        // In the generator basis (g_i, g_j - v_j g_i), every relation has zero
        // coefficient on g_i and unchanged coefficients elsewhere.
        if cfg!(debug_assertions) {
            for col in cur.presentation.columns() {
                let mut coeff = Polynomial::zero();
                for (j, p) in col.components().iter().enumerate() {
                    coeff = coeff.add(&field, &p.mul(&field, v.component(j)));
                }
                debug_assert!(ring.reduce_poly(&coeff).is_zero());
            }
        }
        free_twists.push(cur.generator_degrees()[i]);
        let mut gen_twists = cur.generator_degrees().to_vec();
        gen_twists.remove(i);
        let mut entries = cur.presentation.entries.clone();
        entries.remove(i);
        let map = HomogeneousMap {
            source: cur.presentation.source().clone(),
            target: TwistedFreeModule::new(gen_twists),
            entries,
        };
        cur = minimalize(&PresentedModule {
            ring: ring.clone(),
            presentation: map,
            minimal: false,
        });
    }
    (TwistedFreeModule::new(free_twists), cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring_r1() -> RingDescriptor {
        let vars = vec!["x".to_string(), "y".to_string()];
        let f = PrimeField::new(32003).unwrap();
        let ideal = vec![
            Polynomial::parse("x^2", &vars, &f).unwrap(),
            Polynomial::parse("x*y", &vars, &f).unwrap(),
        ];
        RingDescriptor::new(32003, vars, ideal).unwrap()
    }

    fn ring_r5() -> RingDescriptor {
        let vars = vec!["x".to_string(), "y".to_string()];
        let f = PrimeField::new(32003).unwrap();
        let ideal = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| Polynomial::parse(s, &vars, &f).unwrap())
            .collect();
        RingDescriptor::new(32003, vars, ideal).unwrap()
    }

    fn ring_s() -> RingDescriptor {
        RingDescriptor::new(32003, vec!["x".to_string(), "y".to_string()], vec![]).unwrap()
    }

    fn poly(ring: &RingDescriptor, s: &str) -> Polynomial {
        ring.parse_poly(s).unwrap()
    }

    #[test]
    fn minimalize_kills_identity_presentation() {
        let r = ring_s();
        let map = HomogeneousMap::new(
            TwistedFreeModule::new(vec![0]),
            TwistedFreeModule::new(vec![0]),
            vec![vec![Polynomial::constant(2, 1)]],
        )
        .unwrap();
        let m = PresentedModule::new(r, map).unwrap();
        let min = minimalize(&m);
        assert!(is_zero(&min));
        assert_eq!(min.generators().rank(), 0);
    }

    #[test]
    fn minimalize_gaussian_elimination() {
        // coker [[x, 1], [0, y]] is R/(xy), presented by a single entry.
        let r = ring_s();
        let map = HomogeneousMap::new(
            TwistedFreeModule::new(vec![1, 0]),
            TwistedFreeModule::new(vec![0, -1]),
            vec![
                vec![poly(&r, "x"), Polynomial::constant(2, 1)],
                vec![Polynomial::zero(), poly(&r, "y")],
            ],
        )
        .unwrap();
        let m = PresentedModule::new(r.clone(), map).unwrap();
        let min = minimalize(&m);
        assert_eq!(min.generators().rank(), 1);
        assert_eq!(min.relation_count(), 1);
        let rel = min.presentation().entry(0, 0);
        assert_eq!(rel.render(r.vars()), "x*y");
    }

    #[test]
    fn minimalize_is_idempotent() {
        let r = ring_s();
        let k = residue_field(&r);
        let once = minimalize(&k);
        let twice = minimalize(&once);
        assert_eq!(once.presentation(), twice.presentation());
    }

    #[test]
    fn minimalize_drops_redundant_relations() {
        // Relations (x) and (x*y ... wait x*y = y*x is in (x)): the column x*y
        // is redundant over S.
        let r = ring_s();
        let map = HomogeneousMap::new(
            TwistedFreeModule::new(vec![1, 2]),
            TwistedFreeModule::new(vec![0]),
            vec![vec![poly(&r, "x"), poly(&r, "x*y")]],
        )
        .unwrap();
        let m = PresentedModule::new(r, map).unwrap();
        let min = minimalize(&m);
        assert_eq!(min.relation_count(), 1);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let r = ring_r1();
        let k = residue_field(&r);
        let id = ModuleHom::identity(&k);
        assert!(is_zero(&kernel_of_map(&id)));
    }

    #[test]
    fn kernel_of_multiplication_by_x_over_r1() {
        // R -> R, 1 |-> x has kernel ann(x) = m, on 2 generators.
        let r = ring_r1();
        let free = free_module(&r, vec![0]);
        let shifted = free_module(&r, vec![-1]);
        let f = ModuleHom::new(free, shifted, vec![vec![poly(&r, "x")]]).unwrap();
        let ker = kernel_of_map(&f);
        assert_eq!(ker.generators().rank(), 2);
        assert!(!is_zero(&ker));
    }

    #[test]
    fn kernel_of_map_to_zero_is_source() {
        let r = ring_r1();
        let free = free_module(&r, vec![0]);
        let zero = zero_module(&r);
        let f = ModuleHom::new(free, zero, vec![]).unwrap();
        let ker = kernel_of_map(&f);
        assert!(is_free(&ker));
        assert_eq!(ker.generators().rank(), 1);
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        // k -> R sending the generator to 1 does not kill the relations.
        let r = ring_r1();
        let k = residue_field(&r);
        let free = free_module(&r, vec![0]);
        let err = ModuleHom::new(k, free, vec![vec![Polynomial::constant(2, 1)]]).unwrap_err();
        assert!(matches!(err, Error::IllDefinedMap { .. }));
    }

    #[test]
    fn direct_sum_with_zero() {
        let r = ring_r1();
        let k = residue_field(&r);
        let z = zero_module(&r);
        let s = direct_sum(&k, &z).unwrap();
        assert_eq!(s.generators().rank(), 1);
        assert_eq!(s.relation_count(), 2);
    }

    #[test]
    fn direct_sum_of_residue_fields_over_r5() {
        let r = ring_r5();
        let k = residue_field(&r);
        let s = direct_sum(&k, &k).unwrap();
        assert_eq!(s.generators().rank(), 2);
        assert_eq!(s.relation_count(), 4);
        assert!(s.is_minimal());
    }

    #[test]
    fn direct_sum_requires_same_ring() {
        let a = residue_field(&ring_r1());
        let b = residue_field(&ring_r5());
        assert!(matches!(direct_sum(&a, &b), Err(Error::RingMismatch)));
    }

    #[test]
    fn free_and_zero_predicates() {
        let r = ring_r1();
        assert!(is_zero(&zero_module(&r)));
        assert!(is_free(&free_module(&r, vec![0, -1, 3])));
        let k = residue_field(&r);
        assert!(!is_zero(&k));
        assert!(!is_free(&k));
    }

    #[test]
    fn split_constructed_free_summand() {
        let r = ring_r1();
        let m = direct_sum(&free_module(&r, vec![0]), &residue_field(&r)).unwrap();
        let (free, residual) = split_free_summands(&m);
        assert_eq!(free.rank(), 1);
        assert_eq!(residual.generators().rank(), 1);
        assert_eq!(residual.relation_count(), 2);
    }

    #[test]
    fn residue_field_has_no_free_summand() {
        let r = ring_r1();
        let (free, residual) = split_free_summands(&residue_field(&r));
        assert_eq!(free.rank(), 0);
        assert_eq!(residual.generators().rank(), 1);
    }

    #[test]
    fn maximal_ideal_has_no_free_summand() {
        let r = ring_r1();
        let m = irrelevant_ideal(&r);
        assert_eq!(m.generators().rank(), 2);
        assert_eq!(m.relation_count(), 3);
        let (free, residual) = split_free_summands(&m);
        assert_eq!(free.rank(), 0);
        assert_eq!(residual.generators().rank(), 2);
        // Fixed point: splitting again finds nothing.
        let (free2, _) = split_free_summands(&residual);
        assert_eq!(free2.rank(), 0);
    }

    #[test]
    fn kernel_embedding_composes_to_zero() {
        let r = ring_r1();
        let free = free_module(&r, vec![0]);
        let shifted = free_module(&r, vec![-1]);
        let f = ModuleHom::new(free, shifted.clone(), vec![vec![poly(&r, "x")]]).unwrap();
        let (_, embedding) = kernel_with_embedding(&f);
        let gb = shifted.relation_gb();
        for v in &embedding {
            let image = f.matrix().apply(&r, v);
            assert!(shifted.element_is_zero(&image, &gb));
        }
    }
}
