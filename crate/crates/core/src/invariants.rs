//! Hilbert series and the numerical invariants: dimension, depth, type,
//! multiplicity, embedding dimension, minimal generator count, and the
//! Cohen-Macaulay / Gorenstein / minimal-multiplicity / Ulrich predicates.

use crate::error::{Error, Result};
use crate::homology::{depth, ext_from_resolution, Grade};
use crate::modules::{free_module, is_zero, minimalize, PresentedModule};
use crate::resolution::{resolution_of_residue_field, resolve_over_ambient};
use crate::ring::RingDescriptor;

/// The Hilbert series of a graded module as an exact rational function
/// `numer(T) / (1-T)^nvars`, with its reduced form `h(T) / (1-T)^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    offset: i64,
    numer: Vec<i64>,
    reduced_offset: i64,
    reduced: Vec<i64>,
    pole_order: i64,
}

impl HilbertSeries {
    fn new(nvars: usize, offset: i64, numer: Vec<i64>) -> Self {
        let (offset, numer) = trim(offset, numer);
        if numer.is_empty() {
            return HilbertSeries {
                nvars,
                offset: 0,
                numer: Vec::new(),
                reduced_offset: 0,
                reduced: Vec::new(),
                pole_order: -1,
            };
        }
        let mut reduced = numer.clone();
        let mut vanishing = 0i64;
        while reduced.iter().sum::<i64>() == 0 {
            reduced = divide_by_one_minus_t(&reduced);
            vanishing += 1;
        }
        let (reduced_offset, reduced) = trim(offset, reduced);
        HilbertSeries {
            nvars,
            offset,
            numer,
            reduced_offset,
            reduced,
            pole_order: nvars as i64 - vanishing,
        }
    }

    /// Numerator over `(1-T)^nvars`, as `(lowest exponent, coefficients)`.
    pub fn numerator(&self) -> (i64, &[i64]) {
        (self.offset, &self.numer)
    }

    /// Numerator of the reduced form over `(1-T)^dim`.
    pub fn reduced_numerator(&self) -> (i64, &[i64]) {
        (self.reduced_offset, &self.reduced)
    }

    /// Krull dimension: the pole order at `T = 1`; `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        self.pole_order
    }

    /// Reduced numerator evaluated at 1; positive for nonzero modules.
    pub fn multiplicity(&self) -> Option<u64> {
        if self.numer.is_empty() {
            return None;
        }
        let v: i64 = self.reduced.iter().sum();
        debug_assert!(v > 0, "reduced Hilbert numerator must be positive at 1");
        Some(v as u64)
    }

    /// Coefficient of `T^d` in the series expansion: the dimension of the
    /// degree-`d` graded piece.
    pub fn dimension_at(&self, d: i64) -> usize {
        let mut acc: i64 = 0;
        for (i, c) in self.numer.iter().enumerate() {
            let t = self.offset + i as i64;
            if t > d {
                break;
            }
            acc += c * binomial_count(d - t, self.nvars);
        }
        debug_assert!(acc >= 0, "negative graded dimension");
        acc.max(0) as usize
    }

    /// Series of a direct sum: numerators add.
    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.numer.len() as i64)
            .max(other.offset + other.numer.len() as i64);
        let mut numer = vec![0i64; (hi - lo).max(0) as usize];
        for (i, c) in self.numer.iter().enumerate() {
            numer[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in other.numer.iter().enumerate() {
            numer[(other.offset - lo) as usize + i] += c;
        }
        HilbertSeries::new(self.nvars, lo, numer)
    }
}

fn trim(offset: i64, mut coeffs: Vec<i64>) -> (i64, Vec<i64>) {
    let lead = coeffs.iter().take_while(|c| **c == 0).count();
    coeffs.drain(..lead);
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    (offset + lead as i64, coeffs)
}

/// Exact division by `(1 - T)`, valid when the coefficients sum to zero.
fn divide_by_one_minus_t(coeffs: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(coeffs.len().saturating_sub(1));
    let mut acc = 0i64;
    for c in &coeffs[..coeffs.len() - 1] {
        acc += c;
        out.push(acc);
    }
    out
}

/// Number of monomials of degree `d` in `n` variables, `binom(d+n-1, n-1)`.
fn binomial_count(d: i64, n: usize) -> i64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return i64::from(d == 0);
    }
    let mut acc: i128 = 1;
    for i in 0..(n - 1) {
        acc = acc * (d as i128 + 1 + i as i128) / (i as i128 + 1);
    }
    acc as i64
}

/// Exact Hilbert series from the finite resolution over the ambient
/// polynomial ring: the alternating sum of twisted free series.
pub fn hilbert_series(module: &PresentedModule) -> HilbertSeries {
    let res = resolve_over_ambient(module);
    let nvars = module.ring().nvars();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for f in res.modules() {
        for t in f.twists() {
            lo = lo.min(*t);
            hi = hi.max(*t);
        }
    }
    if lo > hi {
        return HilbertSeries::new(nvars, 0, Vec::new());
    }
    let mut numer = vec![0i64; (hi - lo + 1) as usize];
    for (i, f) in res.modules().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for t in f.twists() {
            numer[(t - lo) as usize] += sign;
        }
    }
    HilbertSeries::new(nvars, lo, numer)
}

/// Krull dimension (pole order of the Hilbert series); `-1` for zero modules.
pub fn dimension(module: &PresentedModule) -> i64 {
    hilbert_series(module).dimension()
}

/// Multiplicity of a nonzero module.
pub fn multiplicity(module: &PresentedModule) -> Result<u64> {
    hilbert_series(module).multiplicity().ok_or(Error::ZeroModule)
}

/// Minimal number of generators.
pub fn mu(module: &PresentedModule) -> usize {
    if module.is_minimal() {
        module.generators().rank()
    } else {
        minimalize(module).generators().rank()
    }
}

/// Embedding dimension: the variable count, since defining ideals carry no
/// linear forms.
pub fn edim(ring: &RingDescriptor) -> usize {
    ring.nvars()
}

/// Total k-dimension for finite-length modules; `None` when infinite.
pub fn total_dimension(module: &PresentedModule) -> Option<usize> {
    let hs = hilbert_series(module);
    match hs.dimension() {
        -1 => Some(0),
        0 => hs.multiplicity().map(|e| e as usize),
        _ => None,
    }
}

/// The numerical profile of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingProfile {
    pub dimension: i64,
    pub depth: usize,
    /// Cohen-Macaulay type `r(R) = dim_k Ext^depth(k, R)`.
    pub cm_type: usize,
    pub edim: usize,
    pub multiplicity: u64,
    pub is_cohen_macaulay: bool,
    pub is_gorenstein: bool,
    pub has_minimal_multiplicity: bool,
}

pub fn ring_profile(ring: &RingDescriptor) -> RingProfile {
    let r_mod = free_module(ring, vec![0]);
    let hs = hilbert_series(&r_mod);
    let dim = hs.dimension();
    let e = hs.multiplicity().expect("the ring is nonzero");
    let t = match depth(&r_mod) {
        Grade::Finite(t) => t,
        Grade::Infinite => unreachable!("the ring is nonzero"),
    };
    let res_k = resolution_of_residue_field(ring, t + 1);
    let profile = ext_from_resolution(&res_k, &r_mod, t);
    let cm_type = profile
        .total_dimension(t)
        .expect("Ext^t(k, R) is a finite-dimensional k-space");
    let edim = ring.nvars();
    let is_cm = (t as i64) == dim;
    RingProfile {
        dimension: dim,
        depth: t,
        cm_type,
        edim,
        multiplicity: e,
        is_cohen_macaulay: is_cm,
        is_gorenstein: is_cm && cm_type == 1,
        has_minimal_multiplicity: e as i64 == edim as i64 - dim + 1,
    }
}

/// Maximal Cohen-Macaulay with multiplicity equal to the minimal number of
/// generators.
pub fn is_ulrich(module: &PresentedModule) -> Result<bool> {
    if is_zero(module) {
        return Err(Error::ZeroModule);
    }
    let ring_dim = dimension(&free_module(module.ring(), vec![0]));
    let mcm = match depth(module) {
        Grade::Finite(d) => d as i64 == ring_dim,
        Grade::Infinite => false,
    };
    if !mcm {
        return Ok(false);
    }
    Ok(multiplicity(module)? == mu(module) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::modules::{cyclic_quotient, irrelevant_ideal, residue_field, zero_module};
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
    fn hilbert_series_of_the_plane() {
        let s = ring(&[], &["x", "y"]);
        let hs = hilbert_series(&free_module(&s, vec![0]));
        assert_eq!(hs.numerator(), (0, &[1][..]));
        assert_eq!(hs.dimension(), 2);
        assert_eq!(hs.multiplicity(), Some(1));
        assert_eq!(hs.dimension_at(5), 6);
    }

    #[test]
    fn hilbert_series_of_r2() {
        let r2 = ring(&["x*y"], &["x", "y"]);
        let hs = hilbert_series(&free_module(&r2, vec![0]));
        assert_eq!(hs.reduced_numerator(), (0, &[1, 1][..]));
        assert_eq!(hs.dimension(), 1);
        assert_eq!(hs.multiplicity(), Some(2));
        // 1, 2, 2, 2, ...
        assert_eq!(hs.dimension_at(0), 1);
        assert_eq!(hs.dimension_at(4), 2);
    }

    #[test]
    fn hilbert_series_of_r5() {
        let r5 = ring(&["x^2", "x*y", "y^2"], &["x", "y"]);
        let hs = hilbert_series(&free_module(&r5, vec![0]));
        assert_eq!(hs.reduced_numerator(), (0, &[1, 2][..]));
        assert_eq!(hs.dimension(), 0);
        assert_eq!(hs.multiplicity(), Some(3));
        assert_eq!(hs.dimension_at(1), 2);
        assert_eq!(hs.dimension_at(2), 0);
    }

    #[test]
    fn dimension_and_multiplicity_of_r1() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let free = free_module(&r1, vec![0]);
        assert_eq!(dimension(&free), 1);
        assert_eq!(multiplicity(&free).unwrap(), 1);
    }

    #[test]
    fn mu_of_the_maximal_ideal_over_r1() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        assert_eq!(mu(&irrelevant_ideal(&r1)), 2);
        assert_eq!(edim(&r1), 2);
    }

    #[test]
    fn multiplicity_of_zero_module_is_an_error() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        assert!(matches!(
            multiplicity(&zero_module(&r1)),
            Err(Error::ZeroModule)
        ));
        assert_eq!(dimension(&zero_module(&r1)), -1);
    }

    #[test]
    fn profile_of_r2_is_gorenstein() {
        let r2 = ring(&["x*y"], &["x", "y"]);
        let p = ring_profile(&r2);
        assert_eq!(p.dimension, 1);
        assert_eq!(p.depth, 1);
        assert_eq!(p.cm_type, 1);
        assert!(p.is_cohen_macaulay);
        assert!(p.is_gorenstein);
        assert!(p.has_minimal_multiplicity);
    }

    #[test]
    fn profile_of_r1_has_depth_zero_type_one() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let p = ring_profile(&r1);
        assert_eq!(p.dimension, 1);
        assert_eq!(p.depth, 0);
        assert_eq!(p.cm_type, 1);
        assert!(!p.is_cohen_macaulay);
        assert!(!p.is_gorenstein);
    }

    #[test]
    fn profile_of_r5_has_type_two_and_minimal_multiplicity() {
        let r5 = ring(&["x^2", "x*y", "y^2"], &["x", "y"]);
        let p = ring_profile(&r5);
        assert_eq!(p.dimension, 0);
        assert_eq!(p.depth, 0);
        assert_eq!(p.cm_type, 2);
        assert_eq!(p.multiplicity, 3);
        assert!(p.has_minimal_multiplicity);
        assert!(!p.is_gorenstein);
    }

    #[test]
    fn ulrich_examples_over_r2() {
        let r2 = ring(&["x*y"], &["x", "y"]);
        let x = r2.parse_poly("x").unwrap();
        let line = cyclic_quotient(&r2, &[x]);
        assert!(is_ulrich(&line).unwrap());
        assert!(!is_ulrich(&free_module(&r2, vec![0])).unwrap());
        assert!(!is_ulrich(&residue_field(&r2)).unwrap());
    }

    #[test]
    fn direct_sum_adds_hilbert_series() {
        let r1 = ring(&["x^2", "x*y"], &["x", "y"]);
        let k = residue_field(&r1);
        let m = irrelevant_ideal(&r1);
        let sum = crate::modules::direct_sum(&k, &m).unwrap();
        let lhs = hilbert_series(&sum);
        let rhs = hilbert_series(&k).add(&hilbert_series(&m));
        assert_eq!(lhs, rhs);
        for d in 0..=8 {
            assert_eq!(
                lhs.dimension_at(d),
                hilbert_series(&k).dimension_at(d) + hilbert_series(&m).dimension_at(d)
            );
        }
    }
}
