//! Property tests: exact linear algebra, the dg structure on endomorphisms of resolutions,
//! and structural invariants on random directed algebras.

use std::rc::Rc;
use std::sync::Arc;

use num_traits::{One, Zero};
use proptest::prelude::*;

use qext::algebra::Algebra;
use qext::ext::{DgElem, ExtTable, Family};
use qext::linalg::{complement, Matrix};
use qext::module::{hom_space, Module};
use qext::presentation::{linear_quiver, Path, Presentation, Quiver, Relation};
use qext::transfer::{SplittingMode, Transfer};
use qext::{Rational, F7};

type Q = Rational;

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn matrix_strategy() -> impl Strategy<Value = Matrix<Q>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_rows(c, v.chunks(c).map(|row| row.iter().map(|&x| q(x)).collect()).collect()))
    })
}

fn identity_like(m: &Matrix<Q>) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)] == if i == j { Q::one() } else { Q::zero() }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_and_kernel(m in matrix_strategy()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        for v in k.row_vecs() {
            prop_assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent_and_preserves_row_space(m in matrix_strategy()) {
        let (r, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
        let (r2, p2) = r.rref();
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(p2, pivots);
        let stacked = Matrix::from_rows(m.cols(), m.row_vecs().into_iter().chain(r.row_vecs()).collect());
        prop_assert_eq!(stacked.rank(), m.rank());
    }

    #[test]
    fn inverse_when_full_rank(m in matrix_strategy()) {
        if m.rows() == m.cols() {
            match m.inverse() {
                Some(inv) => prop_assert!(identity_like(&inv.mul(&m).unwrap()) && identity_like(&m.mul(&inv).unwrap())),
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn complement_spans_the_whole_space(m in matrix_strategy()) {
        let c = complement(&m);
        let all = Matrix::from_rows(m.cols(), m.row_vecs().into_iter().chain(c.row_vecs()).collect());
        prop_assert_eq!(all.rank(), m.cols());
        prop_assert_eq!(c.rows() + m.rank(), m.cols());
    }

    #[test]
    fn solve_finds_preimages(m in matrix_strategy(), seed in proptest::collection::vec(-3i64..=3, 6)) {
        let x: Vec<Q> = (0..m.cols()).map(|i| q(seed[i])).collect();
        let b = m.apply(&x);
        let y = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn prime_field_axioms(a in 0i64..7, b in 1i64..7, c in 0i64..7) {
        let (a, b, c) = (F7::new(a), F7::new(b), F7::new(c));
        prop_assert_eq!((a * b) / b, a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(b * (F7::one() / b), F7::one());
    }
}

fn family_transfer() -> Rc<Transfer<Q>> {
    thread_local! {
        static T: Rc<Transfer<Q>> = {
            let alg = Arc::new(Algebra::build(&linear_quiver::<Q>(5, 3)).unwrap());
            let table = Arc::new(ExtTable::build(&alg, Family::Simples, 8).unwrap());
            Rc::new(Transfer::new(table, SplittingMode::Lifted).unwrap())
        };
    }
    T.with(Rc::clone)
}

/// A random element of the block `𝒟^d(X_a, X_b)`.
fn random_elem(tr: &Transfer<Q>, a: usize, b: usize, d: i64, seed: &[i64]) -> DgElem<Q> {
    let dim = tr.block_dim(a, b, d);
    let v: Vec<Q> = (0..dim).map(|k| q(seed[k % seed.len()] * ((k as i64 % 3) - 1))).collect();
    tr.block_elem(a, b, d, &v)
}

fn sub(x: &DgElem<Q>, y: &DgElem<Q>) -> DgElem<Q> {
    let mut out = x.clone();
    out.add_scaled(&-Q::one(), y);
    out.pruned()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differential_squares_to_zero(a in 0usize..5, b in 0usize..5, d in -2i64..4, seed in proptest::collection::vec(-2i64..=2, 1..8)) {
        let tr = family_transfer();
        let f = random_elem(&tr, a, b, d, &seed);
        let dd = tr.boundary(a, b, &tr.boundary(a, b, &f).unwrap()).unwrap();
        prop_assert!(dd.pruned().is_zero());
    }

    #[test]
    fn leibniz_rule(a in 0usize..5, b in 0usize..5, c in 0usize..5, d1 in -1i64..3, d2 in -1i64..3,
                    s1 in proptest::collection::vec(-2i64..=2, 1..6), s2 in proptest::collection::vec(-2i64..=2, 1..6)) {
        let tr = family_transfer();
        let alg = &tr.table.alg;
        let g = random_elem(&tr, a, b, d1, &s1);
        let f = random_elem(&tr, b, c, d2, &s2);
        let lhs = tr.boundary(a, c, &f.compose(alg, &g).unwrap()).unwrap();
        let mut rhs = tr.boundary(b, c, &f).unwrap().compose(alg, &g).unwrap();
        let sign = if d2 % 2 == 0 { Q::one() } else { -Q::one() };
        rhs.add_scaled(&sign, &f.compose(alg, &tr.boundary(a, b, &g).unwrap()).unwrap());
        prop_assert!(sub(&lhs, &rhs).is_zero());
    }

    #[test]
    fn homotopy_relations(a in 0usize..5, b in 0usize..5, d in -1i64..4, seed in proptest::collection::vec(-2i64..=2, 1..8)) {
        let tr = family_transfer();
        let f = random_elem(&tr, a, b, d, &seed);
        let h = tr.apply_h(a, b, &f).unwrap();
        prop_assert!(tr.apply_h(a, b, &h).unwrap().pruned().is_zero());
        // f = ip(f) + ∂h(f) + h∂(f).
        let mut sum = tr.include_projection(a, b, &f).unwrap();
        sum.add_scaled(&Q::one(), &tr.boundary(a, b, &h).unwrap());
        sum.add_scaled(&Q::one(), &tr.apply_h(a, b, &tr.boundary(a, b, &f).unwrap()).unwrap());
        prop_assert!(sub(&sum, &f).is_zero());
    }
}

/// Random directed algebra from a seed: up to four vertices, up to three relations, each a
/// path of length two or a binomial of two parallel paths.
fn directed_algebra() -> impl Strategy<Value = Presentation<Q>> {
    (2usize..=4, proptest::collection::vec(0u8..3, 6), proptest::collection::vec((0usize..64, 0usize..64, -2i64..=2), 0..=3))
        .prop_map(|(n, counts, rels)| {
            let mut quiver = Quiver::new(n);
            let mut k = 0;
            for s in 0..n {
                for t in s + 1..n {
                    let c = if t == s + 1 { counts[k].max(1) } else { counts[k] % 2 };
                    for r in 0..c {
                        quiver.add_arrow(&format!("a{}_{}_{r}", s + 1, t + 1), s, t);
                    }
                    k += 1;
                }
            }
            let mut paths = Vec::new();
            for x in 0..quiver.arrows.len() {
                for y in 0..quiver.arrows.len() {
                    if let Some(p) = Path::from_arrows(&quiver, &[x, y]) {
                        paths.push(p);
                    }
                }
            }
            let mut pres = Presentation::new("random", quiver);
            if paths.is_empty() {
                return pres;
            }
            for (i, j, c) in rels {
                let p = paths[i % paths.len()].clone();
                let parallel: Vec<&Path> = paths.iter().filter(|x| x.src == p.src && x.tgt == p.tgt && **x != p).collect();
                let mut terms = vec![(Q::one(), p.clone())];
                if c != 0 && !parallel.is_empty() {
                    terms.push((q(c), parallel[j % parallel.len()].clone()));
                }
                if pres.relations.iter().all(|r| r.terms.iter().all(|(_, x)| *x != p)) {
                    pres.relations.push(Relation { terms });
                }
            }
            pres
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_directed_algebras(pres in directed_algebra()) {
        let alg = Arc::new(Algebra::build(&pres).unwrap());
        for family in [Family::Simples, Family::Standards] {
            let table = Arc::new(ExtTable::build(&alg, family, 8).unwrap());
            prop_assert!(table.check_associative().unwrap());
            let modules: Vec<Module<Q>> = (0..alg.n())
                .map(|i| match family {
                    Family::Simples => Module::simple(&alg, i).unwrap(),
                    Family::Standards => Module::standard(&alg, i).unwrap(),
                })
                .collect();
            for i in 0..alg.n() {
                prop_assert!(table.resolutions[i].complete);
                for j in 0..alg.n() {
                    prop_assert_eq!(table.dim(i, j, 0), Some(hom_space(&modules[i], &modules[j]).unwrap().len()));
                }
            }
            let tr = Transfer::new(table.clone(), SplittingMode::Lifted).unwrap();
            for t in tr.tuples(2) {
                let m2 = tr.m(&t).unwrap().expect("complete resolutions");
                let y = table.product(t[0], t[1]).unwrap().expect("known product");
                let pad = |v: &[Q], k: usize| v.get(k).cloned().unwrap_or_else(Q::zero);
                let len = m2.coeffs.len().max(y.len());
                prop_assert!((0..len).all(|k| pad(&m2.coeffs, k) == pad(y, k)));
            }
            let st = tr.verify_stasheff(4).unwrap();
            prop_assert!(st.holds, "{:?}", st.violations);
            prop_assert!(tr.check_internal_degrees(4).unwrap());
        }
    }
}
