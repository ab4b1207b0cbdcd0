//! Algebraic invariants of the monomial and division layers: ordering
//! axioms against a textbook comparator, lcm laws, autoreduction, the
//! separation partition, and the lcm characterization of cone
//! intersections.

use std::cmp::Ordering;

use proptest::prelude::*;

use involutive::division::{
    cone_member, separation, separation_table, DivisionKind, Separation,
};
use involutive::monomial::{Monomial, MonomialSet, OrderingKind};

fn arb_monomial_fixed(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn arb_set(n: usize, max_exp: u32, max_size: usize) -> impl Strategy<Value = MonomialSet> {
    proptest::collection::vec(arb_monomial_fixed(n, max_exp), 1..=max_size)
        .prop_map(move |items| MonomialSet::from_monomials(n, OrderingKind::Lex, items))
}

/// Matrix-order definition of degrevlex: compare total degree, then the
/// negated exponents from the last variable backwards.
fn degrevlex_textbook(a: &Monomial, b: &Monomial) -> Ordering {
    let key = |m: &Monomial| {
        let mut k = vec![i64::from(m.degree())];
        for i in (1..m.arity()).rev() {
            k.push(-i64::from(m.deg(i)));
        }
        k
    };
    key(a).cmp(&key(b))
}

/// All exponent vectors over n variables with total degree at most `bound`.
fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(current: &mut Vec<u32>, var: usize, rest: u32, out: &mut Vec<Monomial>) {
        if var == current.len() - 1 {
            for e in 0..=rest {
                current[var] = e;
                out.push(Monomial::new(current.clone()));
            }
            current[var] = 0;
            return;
        }
        for e in 0..=rest {
            current[var] = e;
            rec(current, var + 1, rest - e, out);
        }
        current[var] = 0;
    }
    rec(&mut current, 0, bound, &mut out);
    out
}

#[test]
fn degrevlex_agrees_with_textbook_matrix_order_exhaustively() {
    for n in 1..=3usize {
        let all = monomials_up_to(n, 4);
        for a in &all {
            for b in &all {
                assert_eq!(
                    OrderingKind::DegRevLex.compare(a, b),
                    degrevlex_textbook(a, b),
                    "{a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn prolongation_raises_degree_by_one_exhaustively() {
    for n in 1..=3usize {
        for u in monomials_up_to(n, 5) {
            for var in 0..n {
                assert_eq!(u.multiply(var).degree(), u.degree() + 1);
            }
        }
    }
}

proptest! {
    #[test]
    fn orderings_are_total_and_antisymmetric(
        a in arb_monomial_fixed(6, 3),
        b in arb_monomial_fixed(6, 3),
    ) {
        for ord in OrderingKind::ALL {
            let ab = ord.compare(&a, &b);
            let ba = ord.compare(&b, &a);
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }
    }

    #[test]
    fn orderings_are_transitive(
        a in arb_monomial_fixed(5, 3),
        b in arb_monomial_fixed(5, 3),
        c in arb_monomial_fixed(5, 3),
    ) {
        for ord in OrderingKind::ALL {
            let mut sorted = [&a, &b, &c];
            sorted.sort_by(|x, y| ord.compare(x, y));
            prop_assert_ne!(ord.compare(sorted[0], sorted[1]), Ordering::Greater);
            prop_assert_ne!(ord.compare(sorted[1], sorted[2]), Ordering::Greater);
            prop_assert_ne!(ord.compare(sorted[0], sorted[2]), Ordering::Greater);
        }
    }

    #[test]
    fn orderings_are_admissible(
        u in arb_monomial_fixed(5, 4),
        v in arb_monomial_fixed(5, 4),
    ) {
        let one = Monomial::one(5);
        for ord in OrderingKind::ALL {
            prop_assert_ne!(ord.compare(&one, &u), Ordering::Greater);
            let uv = ord.compare(&u, &v);
            for var in 0..5 {
                prop_assert_eq!(
                    ord.compare(&u.multiply(var), &v.multiply(var)),
                    uv,
                    "multiplication by x{} must preserve the order",
                    var + 1
                );
            }
        }
    }

    #[test]
    fn lcm_laws(
        a in arb_monomial_fixed(4, 5),
        b in arb_monomial_fixed(4, 5),
        c in arb_monomial_fixed(4, 5),
    ) {
        prop_assert_eq!(a.lcm(&b), b.lcm(&a));
        prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
        prop_assert_eq!(a.lcm(&a), a.clone());
        prop_assert!(a.divides(&a.lcm(&b)));
        prop_assert!(b.divides(&a.lcm(&b)));
    }

    #[test]
    fn autoreduction_laws(set in arb_set(4, 4, 10)) {
        let reduced = set.autoreduce();
        prop_assert_eq!(reduced.autoreduce(), reduced.clone());
        for u in &reduced {
            prop_assert!(!reduced.iter().any(|v| v != u && v.divides(u)));
        }
        for removed in set.iter().filter(|m| !reduced.contains(m)) {
            prop_assert!(reduced.iter().any(|v| v.divides(removed)));
        }
    }

    #[test]
    fn separations_partition_the_variables(set in arb_set(5, 4, 8)) {
        for kind in DivisionKind::ALL {
            let table = separation_table(kind, &set);
            for i in 0..set.len() {
                let sep = table.get(i);
                let mult: Vec<usize> = sep.multiplicative().collect();
                let nonmult: Vec<usize> = sep.nonmultiplicative().collect();
                let mut union = mult.clone();
                union.extend(&nonmult);
                union.sort_unstable();
                prop_assert_eq!(union, (0..set.arity()).collect::<Vec<_>>());
                prop_assert!(mult.iter().all(|v| !nonmult.contains(v)));
            }
        }
    }

    #[test]
    fn thomas_multiplicative_iff_maximal_degree(set in arb_set(5, 5, 10)) {
        let table = separation_table(DivisionKind::Thomas, &set);
        for (i, u) in set.iter().enumerate() {
            for var in 0..set.arity() {
                let max = set.iter().map(|v| v.deg(var)).max().unwrap();
                prop_assert_eq!(table.get(i).is_multiplicative(var), u.deg(var) == max);
            }
        }
    }

    #[test]
    fn global_divisions_ignore_the_set(
        set in arb_set(4, 4, 8),
        extra in arb_monomial_fixed(4, 4),
    ) {
        let mut bigger = set.clone();
        if !bigger.contains(&extra) {
            bigger.insert(extra);
        }
        for kind in [DivisionKind::Pommaret, DivisionKind::DivisionII] {
            for u in &set {
                prop_assert_eq!(separation(kind, u, &set), separation(kind, u, &bigger));
            }
        }
    }

    /// Cone intersection is decided by the lcm: u·L(u) and v·L(v) meet in
    /// some monomial iff they meet in lcm(u,v), for arbitrary separations.
    #[test]
    fn lcm_decides_cone_intersection(
        u in arb_monomial_fixed(3, 2),
        v in arb_monomial_fixed(3, 2),
        mask_u in 0u32..8,
        mask_v in 0u32..8,
    ) {
        let sep_u = Separation::from_multiplicative(3, (0..3).filter(|i| mask_u >> i & 1 == 1));
        let sep_v = Separation::from_multiplicative(3, (0..3).filter(|i| mask_v >> i & 1 == 1));
        let l = u.lcm(&v);
        let via_lcm = cone_member(&l, &u, &sep_u) && cone_member(&l, &v, &sep_v);
        let brute = monomials_up_to(3, l.degree() + 2)
            .iter()
            .any(|w| cone_member(w, &u, &sep_u) && cone_member(w, &v, &sep_v));
        prop_assert_eq!(via_lcm, brute);
    }
}

#[test]
fn monomial_arity_one_minimum() {
    // Monomials in one variable order linearly under every ordering.
    let all = monomials_up_to(1, 6);
    for ord in OrderingKind::ALL {
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| ord.compare(a, b));
        for (i, m) in sorted.iter().enumerate() {
            assert_eq!(m.degree(), i as u32);
        }
    }
}
