//! Seeded random monomial sets for the axiom and oracle suites.

use rand::Rng;

use crate::monomial::{Monomial, MonomialSet, OrderingKind};

/// Size bounds for random set generation.
#[derive(Clone, Copy, Debug)]
pub struct SetBounds {
    pub max_vars: usize,
    pub max_size: usize,
    pub max_degree: u32,
}

impl Default for SetBounds {
    fn default() -> Self {
        SetBounds { max_vars: 5, max_size: 12, max_degree: 6 }
    }
}

/// One random monomial with total degree at most `max_degree`.
pub fn random_monomial(rng: &mut impl Rng, arity: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; arity];
    for _ in 0..degree {
        exps[rng.gen_range(0..arity)] += 1;
    }
    Monomial::new(exps)
}

/// A nonempty duplicate-free random set within `bounds`, sorted under
/// `order`.  Arity and size are drawn uniformly from the bounds.
pub fn random_monomial_set(
    rng: &mut impl Rng,
    bounds: SetBounds,
    order: OrderingKind,
) -> MonomialSet {
    let arity = rng.gen_range(1..=bounds.max_vars);
    let size = rng.gen_range(1..=bounds.max_size);
    let mut set = MonomialSet::empty(arity, order);
    for _ in 0..4 * size {
        if set.len() >= size {
            break;
        }
        let m = random_monomial(rng, arity, bounds.max_degree);
        if !set.contains(&m) {
            set.insert(m);
        }
    }
    if set.is_empty() {
        set.insert(Monomial::one(arity));
    }
    set
}
