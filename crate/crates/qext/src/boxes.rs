//! The regular exact Borel subalgebra `B̂` of the box attached to `Ext*_Λ(Δ, Δ)` and the
//! projective multiplicities of its Morita companion `R`.
//!
//! Arrows of `B̂` are dual to a basis of `Ext¹(Δ, Δ)`. Its relations span the image of
//! `Σ 𝔻mₙ : 𝔻Ext² → ⊕ (𝔻Ext¹)^{⊗n}`, where a pure tensor is the path of the dual arrows.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Algebra, DualExtension};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{Path, Presentation, Quiver, Relation};
use crate::scalar::Scalar;
use crate::transfer::Transfer;

/// Quiver of `B̂` with one arrow per `Ext¹` basis element; `arrow_ids[a]` is the basis id
/// dual to arrow `a`.
pub fn borel_quiver<F: Scalar>(lt: &Transfer<F>) -> Result<(Quiver, Vec<usize>)> {
    let table = &lt.table;
    let n = table.n();
    let mut q = Quiver::new(n);
    let mut ids = Vec::new();
    for i in 0..n {
        if !table.knows(i, 1) {
            return Err(Error::CutoffExceeded(format!("Ext^1 of module {} is beyond the cutoff", i + 1)));
        }
        for j in 0..n {
            let group = table.ids(i, j, 1);
            for (r, &id) in group.iter().enumerate() {
                let name = if group.len() == 1 {
                    format!("x{}_{}", i + 1, j + 1)
                } else {
                    format!("x{}_{}_{}", i + 1, j + 1, r + 1)
                };
                q.add_arrow(&name, i, j);
                ids.push(id);
            }
        }
    }
    Ok((q, ids))
}

/// All arrow paths of length `2..=max_len`, as arrow lists in application order.
fn arrow_paths(q: &Quiver, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    while let Some(p) = stack.pop() {
        if p.len() >= 2 {
            out.push(p.clone());
        }
        if p.len() == max_len {
            continue;
        }
        let end = q.arrows[*p.last().expect("nonempty")].tgt;
        for (a, arrow) in q.arrows.iter().enumerate() {
            if arrow.src == end {
                let mut next = p.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Relations of `B̂`: for every `Ext²` basis element `z`, the element
/// `Σₙ Σ z*(mₙ(eₙ, …, e₁)) · aₙ⋯a₁` over composable `Ext¹` basis tuples, then an echelon basis
/// of their span per pair of endpoints with cleared denominators.
pub fn borel_relations<F: Scalar>(
    lt: &Transfer<F>,
    q: &Quiver,
    arrow_ids: &[usize],
    max_arity: usize,
) -> Result<Vec<Relation<F>>> {
    let paths = arrow_paths(q, max_arity);
    // Relation vectors per Ext² basis element, over the paths with its endpoints.
    let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, BTreeMap<usize, F>>> = BTreeMap::new();
    for (pi, p) in paths.iter().enumerate() {
        let written: Vec<usize> = p.iter().rev().map(|&a| arrow_ids[a]).collect();
        let out = lt.m(&written)?.ok_or_else(|| {
            Error::CutoffExceeded(format!("m_{} on degree-one inputs is outside the valid range", p.len()))
        })?;
        for (c, &z) in out.coeffs.iter().zip(lt.table.ids(out.src, out.tgt, out.deg)) {
            if !c.is_zero() {
                rows.entry((out.src, out.tgt)).or_default().entry(z).or_default().insert(pi, c.clone());
            }
        }
    }
    let mut rels = Vec::new();
    for ((s, t), by_z) in rows {
        let cols: Vec<usize> =
            (0..paths.len()).filter(|&k| q.arrows[paths[k][0]].src == s && q.arrows[*paths[k].last().expect("path")].tgt == t).collect();
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut m = Matrix::zeros(by_z.len(), cols.len());
        for (r, (_, v)) in by_z.iter().enumerate() {
            for (pi, c) in v {
                m[(r, pos[pi])] = c.clone();
            }
        }
        let (rref, pivots) = m.rref();
        for r in 0..pivots.len() {
            let mut line = rref.row(r).to_vec();
            F::normalize_line(&mut line);
            let terms: Vec<(F, Path)> = line
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let path = Path::from_arrows(q, &paths[cols[k]]).expect("composable arrows");
                    (c, path)
                })
                .collect();
            rels.push(Relation { terms });
        }
    }
    Ok(rels)
}

/// `c_{i·}`: multiplicities of `P_Λ(j)` in `R ⊗ P_{B̂}(i)`, from the composition factors of
/// `P_{B̂}(i)` and the unitriangular matrix `[P_Λ(j) : Δ(v)] = [P_B(j) : L(v)]`.
pub fn decompose_induced_projective<F: Scalar>(bhat: &Algebra<F>, b: &Algebra<F>, i: usize) -> Result<Vec<i64>> {
    let n = bhat.n();
    let mut rest: Vec<i64> = (0..n).map(|v| bhat.between(v, i).len() as i64).collect();
    let mut c = vec![0; n];
    for j in 0..n {
        if rest[j] == 0 {
            continue;
        }
        if rest[j] < 0 || b.between(j, j).len() != 1 || (0..j).any(|v| !b.between(v, j).is_empty()) {
            return Err(Error::Internal(format!("Δ-multiplicities of P({}) are not unitriangular", j + 1)));
        }
        c[j] = rest[j];
        for (v, r) in rest.iter_mut().enumerate() {
            *r -= c[j] * b.between(v, j).len() as i64;
        }
    }
    if rest.iter().any(|&r| r != 0) {
        return Err(Error::Internal(format!("composition factors of P̂({}) are not Δ-filtered", i + 1)));
    }
    Ok(c)
}

/// `t_j = Σ_i c_{ij}`.
pub fn morita_multiplicities(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.first().map_or(0, Vec::len);
    (0..n).map(|j| c.iter().map(|row| row[j]).sum()).collect()
}

/// The computed box data.
#[derive(Clone, Debug)]
pub struct BoxPresentation<F> {
    pub presentation: Presentation<F>,
    /// `Ext¹` basis id dual to each arrow.
    pub arrow_ids: Vec<usize>,
    /// `[P_{B̂}(i) : L(v)]`.
    pub composition: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub t: Vec<i64>,
}

/// JSON summary of a box computation.
#[derive(Clone, Debug, Serialize)]
pub struct BoxReport {
    pub algebra: String,
    pub presentation: String,
    pub arrows: Vec<String>,
    pub relations: usize,
    pub composition: Vec<Vec<i64>>,
    pub decompositions: Vec<Vec<i64>>,
    pub multiplicities: Vec<i64>,
}

/// `B̂`, its relations up to `max_arity` and the Morita multiplicities.
pub fn compute_box<F: Scalar>(lt: &Transfer<F>, de: &DualExtension<F>, max_arity: usize) -> Result<BoxPresentation<F>> {
    let (q, arrow_ids) = borel_quiver(lt)?;
    let relations = borel_relations(lt, &q, &arrow_ids, max_arity)?;
    let mut presentation = Presentation::new(&format!("Bhat({})", lt.table.alg.name), q);
    presentation.relations = relations;
    presentation.validate()?;
    let bhat = Algebra::build(&presentation)?;
    let n = bhat.n();
    let composition = (0..n).map(|i| (0..n).map(|v| bhat.between(v, i).len() as i64).collect()).collect();
    let c: Vec<Vec<i64>> = (0..n).map(|i| decompose_induced_projective(&bhat, &de.b, i)).collect::<Result<_>>()?;
    let t = morita_multiplicities(&c);
    Ok(BoxPresentation { presentation, arrow_ids, composition, c, t })
}

impl<F: Scalar> BoxPresentation<F> {
    pub fn report(&self, algebra: &str) -> BoxReport {
        BoxReport {
            algebra: algebra.to_string(),
            presentation: self.presentation.to_text(),
            arrows: self.presentation.quiver.arrows.iter().map(|a| a.name.clone()).collect(),
            relations: self.presentation.relations.len(),
            composition: self.composition.clone(),
            decompositions: self.c.clone(),
            multiplicities: self.t.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::{ExtTable, Family};
    use crate::presentation::linear_quiver;
    use crate::transfer::SplittingMode;
    use crate::Rational;
    use std::rc::Rc;
    use std::sync::Arc;

    type Q = Rational;

    fn run(bn: usize, bl: usize, an: usize, al: usize) -> (BoxPresentation<Q>, Transfer<Q>) {
        run_with(&linear_quiver::<Q>(bn, bl), &linear_quiver::<Q>(an, al))
    }

    fn run_with(b: &Presentation<Q>, a: &Presentation<Q>) -> (BoxPresentation<Q>, Transfer<Q>) {
        let bn = b.quiver.n;
        let de = Arc::new(DualExtension::new(b, a, None).unwrap());
        let t = Arc::new(ExtTable::build(&de.b, Family::Simples, 10).unwrap());
        let base = Rc::new(Transfer::new(t, SplittingMode::Lifted).unwrap());
        let lt = Transfer::compatible(base, de.clone()).unwrap();
        (compute_box(&lt, &de, bn.saturating_sub(1).max(2)).unwrap(), lt)
    }

    fn arrows_between(p: &Presentation<Q>, s: usize, t: usize) -> usize {
        p.quiver.arrows.iter().filter(|a| a.src == s && a.tgt == t).count()
    }

    #[test]
    fn family_box_quiver_and_relations() {
        let (bx, lt) = run(5, 3, 5, 3);
        let p = &bx.presentation;
        for s in 0..5 {
            for t in 0..5 {
                let want = usize::from(t > s && t - s <= 3);
                assert_eq!(arrows_between(p, s, t), want, "{s}->{t}");
                assert_eq!(lt.table.ids(s, t, 1).len(), want);
            }
        }
        let mut got: Vec<String> = p.relations.iter().map(|r| r.display(&p.quiver)).collect();
        got.sort();
        let mut want: Vec<String> = [["x1_2", "x2_3", "x3_4"], ["x2_3", "x3_4", "x4_5"], ["x1_2", "x2_3", "x3_5"]]
            .iter()
            .map(|names| {
                let ids: Vec<usize> = names.iter().map(|a| p.quiver.arrow_index(a).unwrap()).collect();
                Relation { terms: vec![(Q::from_integer(1.into()), Path::from_arrows(&p.quiver, &ids).unwrap())] }
                    .display(&p.quiver)
            })
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn hereditary_with_trivial_a_gives_back_b() {
        let (bx, _) = run_with(&linear_quiver::<Q>(4, 0), &Presentation::new("A", Quiver::new(4)));
        assert!(bx.presentation.relations.is_empty());
        for s in 0..4 {
            for t in 0..4 {
                assert_eq!(arrows_between(&bx.presentation, s, t), usize::from(t == s + 1));
            }
        }
        assert_eq!(bx.t, vec![1; 4]);
    }

    #[test]
    fn two_vertex_box_has_one_arrow() {
        let (bx, _) = run(2, 0, 2, 0);
        assert_eq!(bx.presentation.quiver.arrows.len(), 1);
        assert_eq!(arrows_between(&bx.presentation, 0, 1), 1);
    }

    #[test]
    fn koszul_box_has_quadratic_relations() {
        let (bx, _) = run(4, 2, 4, 2);
        assert!(bx.presentation.relations.iter().all(|r| r.terms.iter().all(|(_, p)| p.len() == 2)));
    }

    #[test]
    fn decomposition_of_family_projectives() {
        let (bx, _) = run(5, 3, 5, 3);
        assert_eq!(bx.c[4], vec![0, 0, 0, 0, 1]);
        assert_eq!(bx.c[3], vec![0, 0, 0, 1, 0]);
        assert_eq!(bx.c[2], vec![0, 0, 1, 0, 1]);
        assert_eq!(bx.c[1], vec![0, 1, 0, 1, 2]);
        for i in 0..5 {
            // Every row is a valid Δ-decomposition of the composition factors.
            assert_eq!(bx.c[i][i], 1);
        }
    }

    #[test]
    fn morita_sums_columns() {
        assert_eq!(morita_multiplicities(&[vec![1, 0, 2], vec![0, 1, 1], vec![0, 0, 1]]), vec![1, 1, 4]);
    }
}
