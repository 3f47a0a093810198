//! The ambient graded ring `R = S/I`: a polynomial ring over a prime field
//! modulo a homogeneous ideal, with its reduced Groebner basis cached at
//! construction. A polynomial ring is the special case of an empty ideal.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::modelem::{ModuleElement, ModuleOrder};
use crate::poly::Polynomial;
use crate::resolution::Resolution;
use std::sync::{Arc, Mutex};

#[derive(Debug)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    ideal: Vec<Polynomial>,
    ideal_gb: GroebnerBasis,
    // Minimal resolutions of k are requested all over the homology layer;
    // cache the longest one computed so far.
    res_k: Mutex<Option<Resolution>>,
}

/// Shared, immutable description of the ring. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct RingDescriptor {
    inner: Arc<RingInner>,
}

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.ideal == other.inner.ideal)
    }
}
impl Eq for RingDescriptor {}

impl RingDescriptor {
    /// Quotient of `k[vars]` by the homogeneous ideal generated by `ideal`.
    ///
    /// Every generator must be homogeneous of degree at least 2, so the
    /// embedding dimension equals the number of variables.
    pub fn new(characteristic: u32, vars: Vec<String>, ideal: Vec<Polynomial>) -> Result<Self> {
        let field = PrimeField::new(characteristic)?;
        for (i, g) in ideal.iter().enumerate() {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous { index: i });
            }
            match g.degree() {
                None => return Err(Error::LinearForm { index: i, degree: 0 }),
                Some(d) if d < 2 => return Err(Error::LinearForm { index: i, degree: d }),
                _ => {}
            }
        }
        let gens: Vec<ModuleElement> = ideal
            .iter()
            .map(|p| ModuleElement::from_components(vec![p.clone()]))
            .collect();
        let ideal_gb = buchberger(&field, &[0], ModuleOrder::Top, &gens)?;
        Ok(RingDescriptor {
            inner: Arc::new(RingInner {
                field,
                vars,
                ideal,
                ideal_gb,
                res_k: Mutex::new(None),
            }),
        })
    }

    /// The ambient polynomial ring (same variables, empty ideal).
    pub fn ambient(&self) -> RingDescriptor {
        RingDescriptor::new(self.characteristic(), self.inner.vars.clone(), Vec::new())
            .expect("ambient ring is always valid")
    }

    pub fn field(&self) -> &PrimeField {
        &self.inner.field
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.inner.ideal
    }

    pub fn ideal_gb(&self) -> &GroebnerBasis {
        &self.inner.ideal_gb
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.inner.ideal.is_empty()
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        if self.is_polynomial_ring() {
            return p.clone();
        }
        let e = ModuleElement::from_components(vec![p.clone()]);
        normal_form(&e, &self.inner.ideal_gb).component(0).clone()
    }

    pub fn reduce_element(&self, e: &ModuleElement) -> ModuleElement {
        ModuleElement::from_components(
            e.components().iter().map(|p| self.reduce_poly(p)).collect(),
        )
    }

    /// The defining ideal generators placed in every component slot of a free
    /// module of the given rank; appending these to a generating set turns
    /// polynomial-ring computations into quotient-ring computations.
    pub fn ideal_times_units(&self, rank: usize) -> Vec<ModuleElement> {
        let mut out = Vec::new();
        for q in self.inner.ideal_gb.generators() {
            let p = q.component(0).clone();
            for pos in 0..rank {
                out.push(ModuleElement::from_poly(rank, pos, p.clone()));
            }
        }
        out
    }

    /// Reduced Groebner basis over the quotient ring of the submodule
    /// generated by `gens` inside the twisted free module.
    pub fn module_gb(&self, twists: &[i64], gens: &[ModuleElement]) -> Result<GroebnerBasis> {
        for (i, g) in gens.iter().enumerate() {
            g.check_rank(twists.len())?;
            if !g.is_homogeneous(twists) {
                return Err(Error::NonHomogeneous { index: i });
            }
        }
        let mut engine =
            crate::groebner::GbEngine::new(self.inner.field, twists.to_vec(), ModuleOrder::Top);
        engine.seed_known_basis(&self.ideal_times_units(twists.len()));
        engine.add_generators(gens);
        Ok(engine.into_reduced())
    }

    /// Membership of `f` in the submodule over the quotient ring; `gb` must
    /// come from `module_gb`.
    pub fn reduce_mod(&self, f: &ModuleElement, gb: &GroebnerBasis) -> ModuleElement {
        normal_form(f, gb)
    }

    pub fn parse_poly(&self, src: &str) -> Result<Polynomial> {
        Polynomial::parse(src, &self.inner.vars, &self.inner.field)
    }

    pub(crate) fn cached_res_k(&self) -> &Mutex<Option<Resolution>> {
        &self.inner.res_k
    }
}
