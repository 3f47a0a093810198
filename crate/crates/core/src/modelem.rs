//! Elements of a free module over the polynomial ring, and module term orders.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{cmp_degrevlex, Monomial};
use crate::poly::Polynomial;
use std::cmp::Ordering;

/// Order on module terms `(monomial, position)`.
///
/// `Top` is term-over-position refined by position index (lower index wins ties).
/// `Block { split }` makes every term in positions `< split` larger than every
/// term in positions `>= split`, with `Top` inside each block; it is the
/// elimination order used for kernel and syzygy extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrder {
    Top,
    Block { split: usize },
}

impl ModuleOrder {
    pub fn cmp_terms(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self {
            ModuleOrder::Top => top_cmp(a, b),
            ModuleOrder::Block { split } => {
                let block_a = usize::from(a.1 >= *split);
                let block_b = usize::from(b.1 >= *split);
                match block_a.cmp(&block_b) {
                    Ordering::Equal => top_cmp(a, b),
                    // Lower block index means higher priority.
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                }
            }
        }
    }
}

fn top_cmp(a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
    match cmp_degrevlex(a.0, b.0) {
        Ordering::Equal => b.1.cmp(&a.1),
        other => other,
    }
}

/// An element of a free module, one polynomial component per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    comps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn zero(rank: usize) -> Self {
        ModuleElement { comps: vec![Polynomial::zero(); rank] }
    }

    pub fn from_components(comps: Vec<Polynomial>) -> Self {
        ModuleElement { comps }
    }

    /// `p * e_pos`.
    pub fn from_poly(rank: usize, pos: usize, p: Polynomial) -> Self {
        let mut e = Self::zero(rank);
        e.comps[pos] = p;
        e
    }

    pub fn unit(rank: usize, pos: usize, nvars: usize) -> Self {
        Self::from_poly(rank, pos, Polynomial::constant(nvars, 1))
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, field: &PrimeField, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(field, b))
                .collect(),
        }
    }

    pub fn sub(&self, field: &PrimeField, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(field, b))
                .collect(),
        }
    }

    pub fn scale(&self, field: &PrimeField, c: u32) -> ModuleElement {
        ModuleElement {
            comps: self.comps.iter().map(|p| p.scale(field, c)).collect(),
        }
    }

    /// Multiply every component by the ring term `c * mono`.
    pub fn mul_term(&self, field: &PrimeField, mono: &Monomial, c: u32) -> ModuleElement {
        ModuleElement {
            comps: self
                .comps
                .iter()
                .map(|p| p.mul_term(field, mono, c))
                .collect(),
        }
    }

    /// Leading term `(position, monomial, coefficient)` under `order`.
    pub fn leading_term(&self, order: ModuleOrder) -> Option<(usize, &Monomial, u32)> {
        let mut best: Option<(usize, &Monomial, u32)> = None;
        for (pos, p) in self.comps.iter().enumerate() {
            if let Some((m, c)) = p.leading() {
                best = match best {
                    None => Some((pos, m, c)),
                    Some((bp, bm, bc)) => {
                        if order.cmp_terms((m, pos), (bm, bp)) == Ordering::Greater {
                            Some((pos, m, c))
                        } else {
                            Some((bp, bm, bc))
                        }
                    }
                };
            }
        }
        best
    }

    /// Degree as a homogeneous element of the twisted free module, `None` if zero.
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        for (pos, p) in self.comps.iter().enumerate() {
            if let Some(d) = p.degree() {
                return Some(d as i64 + twists[pos]);
            }
        }
        None
    }

    /// Every nonzero term in component `i` must have degree `d - twists[i]`.
    pub fn is_homogeneous(&self, twists: &[i64]) -> bool {
        let Some(d) = self.degree(twists) else {
            return true;
        };
        self.comps.iter().enumerate().all(|(pos, p)| {
            p.is_homogeneous()
                && p.degree()
                    .map_or(true, |pd| pd as i64 + twists[pos] == d)
        })
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.comps.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: self.comps.len() });
        }
        Ok(())
    }

    /// Deterministic total order used to canonicalize generator lists.
    pub fn cmp_canonical(&self, other: &ModuleElement, twists: &[i64], order: ModuleOrder) -> Ordering {
        let da = self.degree(twists);
        let db = other.degree(twists);
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        match (self.leading_term(order), other.leading_term(order)) {
            (Some((pa, ma, _)), Some((pb, mb, _))) => {
                match order.cmp_terms((ma, pa), (mb, pb)) {
                    Ordering::Equal => {}
                    o => return o.reverse(), // smaller leading term first
                }
            }
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
        // Fall back to a structural comparison for full determinism.
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let la = a.terms().len();
            let lb = b.terms().len();
            match la.cmp(&lb) {
                Ordering::Equal => {}
                o => return o,
            }
            for ((ma, ca), (mb, cb)) in a.terms().iter().zip(b.terms()) {
                match cmp_degrevlex(ma, mb).then(ca.cmp(cb)) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn leading_term_respects_top_order() {
        let f = PrimeField::new(101).unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let x = Polynomial::parse("x", &vars, &f).unwrap();
        let y2 = Polynomial::parse("y^2", &vars, &f).unwrap();
        let e = ModuleElement::from_components(vec![x, y2]);
        // y^2 in position 1 beats x in position 0 by degree.
        let (pos, m, _) = e.leading_term(ModuleOrder::Top).unwrap();
        assert_eq!(pos, 1);
        assert_eq!(m.degree(), 2);
    }

    #[test]
    fn block_order_dominates_degree() {
        let f = PrimeField::new(101).unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let x = Polynomial::parse("x", &vars, &f).unwrap();
        let y2 = Polynomial::parse("y^2", &vars, &f).unwrap();
        let e = ModuleElement::from_components(vec![x, y2]);
        // Position 0 is in the dominant block, so x wins despite lower degree.
        let (pos, _, _) = e.leading_term(ModuleOrder::Block { split: 1 }).unwrap();
        assert_eq!(pos, 0);
    }

    #[test]
    fn homogeneity_with_twists() {
        let f = PrimeField::new(101).unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let x = Polynomial::parse("x", &vars, &f).unwrap();
        let one = Polynomial::constant(2, 1);
        // (x, 1) with twists [0, 1] is homogeneous of degree 1.
        let e = ModuleElement::from_components(vec![x, one]);
        assert!(e.is_homogeneous(&[0, 1]));
        assert_eq!(e.degree(&[0, 1]), Some(1));
        assert!(!e.is_homogeneous(&[0, 0]));
    }
}
