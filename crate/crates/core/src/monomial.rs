//! Monomials in a fixed set of variables, compared in degree-reverse-lexicographic order.

use std::cmp::Ordering;

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when defined.
    pub fn quotient_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps)
    }
}

/// Degree-reverse-lexicographic comparison; `Greater` means larger in the order.
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {
            for i in (0..a.exps.len()).rev() {
                match a.exps[i].cmp(&b.exps[i]) {
                    Ordering::Equal => continue,
                    // Smaller exponent in the last differing variable wins.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_on_two_variables() {
        // x > y, x^2 > xy > y^2
        assert_eq!(cmp_degrevlex(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(cmp_degrevlex(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(cmp_degrevlex(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(cmp_degrevlex(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_separates_xz_and_y_squared() {
        // In k[x,y,z]: x*z < y^2 under degrevlex.
        assert_eq!(cmp_degrevlex(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.quotient_into(&a).unwrap(), m(&[1, 1]));
        assert!(a.quotient_into(&b).is_none());
        assert_eq!(a.lcm(&m(&[0, 3])), m(&[2, 3]));
    }
}
