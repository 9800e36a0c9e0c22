//! Minimal projective resolutions, induced resolutions and linearity checks.
//!
//! A term `P^k = ⊕_σ P(v_σ)[shift_σ]` is a list of [`Summand`]s. Maps between such sums
//! are [`ProjMap`]s: entry `(τ, σ)` is an element `γ ∈ e_{v_σ} Λ e_{w_τ}` and the
//! component `P(v_σ) → P(w_τ)` is `x ↦ xγ`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, DualExtension, Elem};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self};
use crate::linalg::{Echelon, Matrix, PivotRule};
use crate::module::{induce_f_with_basis, top_generators, Module};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Summand {
    pub vertex: usize,
    pub shift: i64,
}

/// A map between direct sums of indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap<F> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Elem<F>>,
}

impl<F: Scalar> ProjMap<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ProjMap { rows, cols, entries: vec![Elem::new(); rows * cols] }
    }

    pub fn identity(alg: &Algebra<F>, term: &[Summand]) -> Self {
        let mut m = Self::zero(term.len(), term.len());
        for (i, s) in term.iter().enumerate() {
            m.set(i, i, sparse::unit(alg.idempotent(s.vertex)));
        }
        m
    }

    /// Entry from source summand `col` to target summand `row`.
    pub fn get(&self, row: usize, col: usize) -> &Elem<F> {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, e: Elem<F>) {
        self.entries[row * self.cols + col] = e;
    }

    pub fn add_to(&mut self, row: usize, col: usize, c: &F, e: &Elem<F>) {
        sparse::axpy(&mut self.entries[row * self.cols + col], c, e);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_empty())
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Elem<F>)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_empty())
            .map(move |(k, e)| (k / self.cols, k % self.cols, e))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, alg: &Algebra<F>, other: &ProjMap<F>) -> Result<ProjMap<F>> {
        if other.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "composing maps with {} and {} middle summands",
                other.rows, self.cols
            )));
        }
        let mut out = ProjMap::zero(self.rows, other.cols);
        for (t, s, f) in other.nonzero_entries() {
            for u in 0..self.rows {
                let g = self.get(u, t);
                if g.is_empty() {
                    continue;
                }
                let p = alg.mul(f, g);
                if !p.is_empty() {
                    out.add_to(u, s, &F::one(), &p);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> ProjMap<F> {
        ProjMap { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| sparse::scale(e, c)).collect() }
    }

    pub fn add_scaled(&mut self, c: &F, other: &ProjMap<F>) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            sparse::axpy(a, c, b);
        }
    }

    pub fn map_entries(&self, f: impl Fn(&Elem<F>) -> Elem<F>) -> ProjMap<F> {
        ProjMap { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Matrix of the underlying linear map in the path-basis coordinates of both sides.
    pub fn to_matrix(&self, alg: &Algebra<F>, src: &[Summand], tgt: &[Summand]) -> Matrix<F> {
        let sc = term_coords(alg, src);
        let tc = term_coords(alg, tgt);
        let tindex: BTreeMap<(usize, usize), usize> = tc.iter().enumerate().map(|(i, c)| ((c.summand, c.basis), i)).collect();
        let mut m: Matrix<F> = Matrix::zeros(tc.len(), sc.len());
        for (col, c) in sc.iter().enumerate() {
            let x = sparse::unit(c.basis);
            for t in 0..self.rows {
                let g = self.get(t, c.summand);
                if g.is_empty() {
                    continue;
                }
                for (&b, v) in &alg.mul(&x, g) {
                    let r = tindex[&(t, b)];
                    m[(r, col)] = m[(r, col)].clone() + v.clone();
                }
            }
        }
        m
    }
}

/// One path-basis coordinate of a sum of projectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coord {
    pub summand: usize,
    pub basis: usize,
    pub vertex: usize,
    pub degree: i64,
}

/// Coordinates `(σ, b)` with `b` a normal path starting at `v_σ`.
pub fn term_coords<F: Scalar>(alg: &Algebra<F>, term: &[Summand]) -> Vec<Coord> {
    let mut out = Vec::new();
    for (s, sm) in term.iter().enumerate() {
        for &b in alg.from(sm.vertex) {
            let be = alg.basis_elem(b);
            out.push(Coord { summand: s, basis: b, vertex: be.tgt(), degree: sm.shift + be.degree });
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Resolution<F> {
    pub alg: Arc<Algebra<F>>,
    pub module: Module<F>,
    /// `terms[k]` lists the summands of `P^k`.
    pub terms: Vec<Vec<Summand>>,
    /// `diffs[k - 1] = d_k : P^k → P^{k-1}`.
    pub diffs: Vec<ProjMap<F>>,
    /// Image in `M` (flat coordinates) of the generator of each summand of `P^0`.
    pub aug: Vec<Vec<F>>,
    pub cutoff: usize,
    /// The kernel after the last computed term vanished.
    pub complete: bool,
    /// Degree shifts are meaningful (algebra and module graded).
    pub graded: bool,
}

type BlockKey = (usize, i64);

impl<F: Scalar> Resolution<F> {
    /// Iterated projective covers of kernels, computing `P^0, …, P^N` for `N = cutoff`.
    pub fn minimal(m: &Module<F>, cutoff: usize) -> Result<Self> {
        let alg = m.alg.clone();
        let graded = alg.graded;
        let key = |vertex: usize, degree: i64| -> BlockKey { (vertex, if graded { degree } else { 0 }) };

        let gens = top_generators(m);
        let term0: Vec<Summand> = gens
            .iter()
            .map(|(v, x)| {
                let k = x.iter().position(|c| !c.is_zero()).expect("generator");
                Summand { vertex: *v, shift: m.degree_of(k) }
            })
            .collect();
        let aug: Vec<Vec<F>> = gens.into_iter().map(|(_, x)| x).collect();

        // Kernel of P^0 → M, blockwise.
        let coords0 = term_coords(&alg, &term0);
        let mut columns: BTreeMap<BlockKey, Vec<(usize, Vec<F>)>> = BTreeMap::new();
        for (i, c) in coords0.iter().enumerate() {
            let g = &aug[c.summand];
            let gv = term0[c.summand].vertex;
            let local = &g[m.offset(gv)..m.offset(gv) + m.dims[gv]];
            let y = m.act_basis_local(c.basis, local);
            let mut img = vec![F::zero(); m.total_dim()];
            let o = m.offset(c.vertex);
            for (k, v) in y.into_iter().enumerate() {
                img[o + k] = v;
            }
            columns.entry(key(c.vertex, c.degree)).or_default().push((i, img));
        }
        let mut kernel = block_kernels(columns, coords0.len(), m.total_dim());

        let mut terms = vec![term0];
        let mut diffs = Vec::new();
        let mut complete = kernel.is_empty();
        for k in 1..=cutoff {
            if kernel.is_empty() {
                complete = true;
                break;
            }
            let prev = terms.last().expect("term").clone();
            let (term, diff) = generators_of_kernel(&alg, &prev, &kernel, graded)?;
            let coords_prev = term_coords(&alg, &prev);
            let index_prev: BTreeMap<(usize, usize), usize> =
                coords_prev.iter().enumerate().map(|(i, c)| ((c.summand, c.basis), i)).collect();
            let coords = term_coords(&alg, &term);
            let mut columns: BTreeMap<BlockKey, Vec<(usize, Vec<F>)>> = BTreeMap::new();
            for (i, c) in coords.iter().enumerate() {
                let x = sparse::unit(c.basis);
                let mut img = vec![F::zero(); coords_prev.len()];
                for t in 0..prev.len() {
                    let g = diff.get(t, c.summand);
                    if g.is_empty() {
                        continue;
                    }
                    for (&b, v) in &alg.mul(&x, g) {
                        let r = index_prev[&(t, b)];
                        img[r] = img[r].clone() + v.clone();
                    }
                }
                columns.entry(key(c.vertex, c.degree)).or_default().push((i, img));
            }
            kernel = block_kernels(columns, coords.len(), coords_prev.len());
            terms.push(term);
            diffs.push(diff);
            if k == cutoff {
                complete = kernel.is_empty();
            }
        }
        let graded = graded && module_is_graded(m);
        Ok(Resolution { alg, module: m.clone(), terms, diffs, aug, cutoff, complete, graded })
    }

    /// Largest `k` with `P^k ≠ 0` (or `None` for the zero module).
    pub fn length(&self) -> Option<usize> {
        (0..self.terms.len()).rev().find(|&k| !self.terms[k].is_empty())
    }

    pub fn term(&self, k: usize) -> &[Summand] {
        self.terms.get(k).map(|t| t.as_slice()).unwrap_or(&[])
    }

    /// `d_k : P^k → P^{k-1}` (zero map outside the computed range).
    pub fn diff(&self, k: usize) -> ProjMap<F> {
        if k == 0 || k > self.diffs.len() {
            return ProjMap::zero(self.term(k.wrapping_sub(1)).len(), self.term(k).len());
        }
        self.diffs[k - 1].clone()
    }

    /// Whether `P^k` and `d_{k+1}` are known, i.e. `Ext^k` can be read off.
    pub fn knows_degree(&self, k: usize) -> bool {
        self.complete || k < self.cutoff
    }

    /// Terms are exact beyond the computed range, so every degree is known.
    pub fn require_degree(&self, k: usize) -> Result<()> {
        if self.knows_degree(k) {
            Ok(())
        } else {
            Err(Error::CutoffExceeded(format!(
                "degree {k} needs a resolution of {} beyond cutoff {}",
                self.module.label, self.cutoff
            )))
        }
    }

    /// Every differential entry lies in the radical.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| d.nonzero_entries().all(|(_, _, e)| self.alg.in_radical(e)))
    }

    /// `d∘d = 0`, `aug∘d₁ = 0`, and exactness at every computed position.
    pub fn audit_exactness(&self) -> Result<bool> {
        let alg = &self.alg;
        for k in 2..=self.diffs.len() {
            if !self.diffs[k - 2].compose(alg, &self.diffs[k - 1])?.is_zero() {
                return Ok(false);
            }
        }
        let mats: Vec<Matrix<F>> =
            (1..=self.diffs.len()).map(|k| self.diffs[k - 1].to_matrix(alg, &self.terms[k], &self.terms[k - 1])).collect();
        let aug = self.aug_matrix();
        if let Some(d1) = mats.first() {
            if !aug.mul(d1)?.is_zero() {
                return Ok(false);
            }
        }
        let dims: Vec<usize> = self.terms.iter().map(|t| term_coords(alg, t).len()).collect();
        let rank = |k: usize| -> usize { if k == 0 || k > mats.len() { 0 } else { mats[k - 1].rank() } };
        if aug.rank() != self.module.total_dim() || dims[0] - aug.rank() != rank(1) {
            return Ok(false);
        }
        for k in 1..self.terms.len() {
            let last = k + 1 == self.terms.len();
            if last && !self.complete {
                break;
            }
            if dims[k] - rank(k) != rank(k + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of the augmentation `P^0 → M`.
    pub fn aug_matrix(&self) -> Matrix<F> {
        let m = &self.module;
        let coords = term_coords(&self.alg, self.term(0));
        let mut mat = Matrix::zeros(m.total_dim(), coords.len());
        for (col, c) in coords.iter().enumerate() {
            let gv = self.terms[0][c.summand].vertex;
            let g = &self.aug[c.summand];
            let y = m.act_basis_local(c.basis, &g[m.offset(gv)..m.offset(gv) + m.dims[gv]]);
            let o = m.offset(c.vertex);
            for (k, v) in y.into_iter().enumerate() {
                mat[(o + k, col)] = v;
            }
        }
        mat
    }

    /// Generators of every term sit in internal degree equal to the homological degree.
    pub fn is_linear(&self) -> bool {
        self.graded && self.terms.iter().enumerate().all(|(k, t)| t.iter().all(|s| s.shift == k as i64))
    }

    /// Term data `(vertex, shift, multiplicity)` per degree, sorted.
    pub fn term_data(&self) -> Vec<Vec<(usize, i64, usize)>> {
        self.terms
            .iter()
            .map(|t| {
                let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
                for s in t {
                    *counts.entry((s.vertex, s.shift)).or_default() += 1;
                }
                counts.into_iter().map(|((v, s), c)| (v, s, c)).collect()
            })
            .collect()
    }

    /// Apply `F = Λ ⊗_B −` termwise.
    pub fn induced(&self, de: &DualExtension<F>) -> Result<Resolution<F>> {
        let (fm, coords) = induce_f_with_basis(de, &self.module)?;
        let lam = &de.lambda;
        let diffs: Vec<ProjMap<F>> = self.diffs.iter().map(|d| d.map_entries(|e| de.embed_b(e))).collect();
        let aug = self
            .aug
            .iter()
            .zip(&self.terms[0])
            .map(|(g, s)| {
                let v = s.vertex;
                let mut x = vec![F::zero(); fm.total_dim()];
                let local = &g[self.module.offset(v)..self.module.offset(v) + self.module.dims[v]];
                let e = lam.idempotent(v);
                for (k, c) in local.iter().enumerate() {
                    if !c.is_zero() {
                        let pos = coords[v].iter().position(|&l| l == (e, v, k)).expect("label");
                        x[fm.offset(v) + pos] = c.clone();
                    }
                }
                x
            })
            .collect();
        let res = Resolution {
            alg: lam.clone(),
            module: fm,
            terms: self.terms.clone(),
            diffs,
            aug,
            cutoff: self.cutoff,
            complete: self.complete,
            graded: self.graded && lam.graded,
        };
        if !res.is_minimal() {
            return Err(Error::Internal("induced resolution is not minimal".into()));
        }
        Ok(res)
    }
}

impl<F: Scalar> fmt::Display for Resolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "minimal resolution of {} (cutoff {}, {})", self.module.label, self.cutoff, if self.complete { "complete" } else { "truncated" })?;
        for (k, data) in self.term_data().iter().enumerate() {
            let parts: Vec<String> = data
                .iter()
                .map(|&(v, s, c)| if c == 1 { format!("P({})[{}]", v + 1, s) } else { format!("P({})[{}]^{}", v + 1, s, c) })
                .collect();
            writeln!(f, "{k:>3} | {}", if parts.is_empty() { "0".to_string() } else { parts.join(" ⊕ ") })?;
        }
        Ok(())
    }
}

fn module_is_graded<F: Scalar>(m: &Module<F>) -> bool {
    let q = m.alg.quiver();
    q.arrows.iter().enumerate().all(|(a, arrow)| {
        let mat = &m.actions[a];
        let (s, t) = (arrow.src, arrow.tgt);
        (0..m.dims[t]).all(|r| {
            (0..m.dims[s]).all(|c| mat[(r, c)].is_zero() || m.degrees[t][r] == m.degrees[s][c] + m.alg.arrow_degrees[a])
        })
    })
}

/// Kernel of a block-diagonal map. `columns[key]` lists `(source coordinate, image)`.
fn block_kernels<F: Scalar>(
    columns: BTreeMap<BlockKey, Vec<(usize, Vec<F>)>>,
    src_dim: usize,
    tgt_dim: usize,
) -> Vec<(BlockKey, Vec<F>)> {
    let mut out = Vec::new();
    for (key, cols) in columns {
        let rows_used: Vec<usize> = (0..tgt_dim).filter(|&r| cols.iter().any(|(_, img)| !img[r].is_zero())).collect();
        let mut mat = Matrix::zeros(rows_used.len(), cols.len());
        for (j, (_, img)) in cols.iter().enumerate() {
            for (i, &r) in rows_used.iter().enumerate() {
                mat[(i, j)] = img[r].clone();
            }
        }
        let ker = if rows_used.is_empty() { Matrix::identity(cols.len()) } else { mat.kernel() };
        for r in 0..ker.rows() {
            let mut v = vec![F::zero(); src_dim];
            for (j, (i, _)) in cols.iter().enumerate() {
                v[*i] = ker[(r, j)].clone();
            }
            out.push((key, v));
        }
    }
    out
}

/// Minimal generators of a submodule `K` of `P = ⊕ P(v_σ)` (given blockwise), returned as
/// the next term and the differential into `P`.
fn generators_of_kernel<F: Scalar>(
    alg: &Algebra<F>,
    prev: &[Summand],
    kernel: &[(BlockKey, Vec<F>)],
    graded: bool,
) -> Result<(Vec<Summand>, ProjMap<F>)> {
    let coords = term_coords(alg, prev);
    let dim = coords.len();
    let index: BTreeMap<(usize, usize), usize> = coords.iter().enumerate().map(|(i, c)| ((c.summand, c.basis), i)).collect();
    let key = |c: &Coord| -> BlockKey { (c.vertex, if graded { c.degree } else { 0 }) };

    // rad K = span of arrow · x for x in K.
    let mut rad: BTreeMap<BlockKey, Echelon<F>> = BTreeMap::new();
    let q = alg.quiver();
    for (_, x) in kernel {
        for a in 0..q.arrows.len() {
            let ae = alg.arrow_elem(a);
            let mut y = vec![F::zero(); dim];
            let mut any = false;
            for (i, c) in coords.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                for (&b, v) in &alg.mul(ae, &sparse::unit(c.basis)) {
                    let j = index[&(c.summand, b)];
                    y[j] = y[j].clone() + x[i].clone() * v.clone();
                    any = true;
                }
            }
            if any && y.iter().any(|v| !v.is_zero()) {
                let k = key(&coords[y.iter().position(|v| !v.is_zero()).expect("nonzero")]);
                rad.entry(k).or_insert_with(|| Echelon::new(dim, PivotRule::First)).insert(y);
            }
        }
    }
    let mut by_block: BTreeMap<BlockKey, Vec<Vec<F>>> = BTreeMap::new();
    for (k, x) in kernel {
        by_block.entry(*k).or_default().push(x.clone());
    }
    let mut term = Vec::new();
    let mut gens: Vec<Vec<F>> = Vec::new();
    for (k, xs) in by_block {
        let mut ech = rad.remove(&k).unwrap_or_else(|| Echelon::new(dim, PivotRule::First));
        let basis = crate::linalg::row_space(&Matrix::from_rows(dim, xs));
        for r in 0..basis.rows() {
            let x = basis.row(r).to_vec();
            if ech.insert(x.clone()).is_some() {
                let shift = coords[x.iter().position(|v| !v.is_zero()).expect("nonzero")].degree;
                term.push(Summand { vertex: k.0, shift });
                gens.push(x);
            }
        }
    }
    let mut diff = ProjMap::zero(prev.len(), term.len());
    for (g, x) in gens.iter().enumerate() {
        for (i, c) in coords.iter().enumerate() {
            if !x[i].is_zero() {
                diff.add_to(c.summand, g, &x[i], &sparse::unit(c.basis));
            }
        }
    }
    Ok((term, diff))
}

/// Koszulity summary of a graded algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub algebra: String,
    pub cutoff: usize,
    pub graded: bool,
    pub koszul: bool,
    /// Only for dual extensions: all standard modules have linear resolutions.
    pub left_standard_koszul: Option<bool>,
    /// Only for dual extensions: the left check on the opposite dual extension.
    pub right_standard_koszul: Option<bool>,
    /// Modules whose resolution was not linear.
    pub nonlinear: Vec<String>,
}

/// All simples (and, for a dual extension, all standards) checked for linear resolutions
/// up to the cutoff.
pub fn koszul_report<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    cutoff: usize,
    opposite_dual: Option<&DualExtension<F>>,
    is_dual_extension: bool,
) -> Result<KoszulReport> {
    let mut nonlinear = Vec::new();
    let mut koszul = alg.graded;
    for i in 0..alg.n() {
        let r = Resolution::minimal(&Module::simple(alg, i)?, cutoff)?;
        if !r.is_linear() {
            koszul = false;
            nonlinear.push(format!("L({})", i + 1));
        }
    }
    let left = if is_dual_extension { Some(standards_linear(alg, cutoff, &mut nonlinear)?) } else { None };
    let right = match opposite_dual {
        Some(de) => {
            let mut scratch = Vec::new();
            Some(standards_linear(&de.lambda, cutoff, &mut scratch)?)
        }
        None => None,
    };
    Ok(KoszulReport {
        algebra: alg.name.clone(),
        cutoff,
        graded: alg.graded,
        koszul,
        left_standard_koszul: left,
        right_standard_koszul: right,
        nonlinear,
    })
}

fn standards_linear<F: Scalar>(alg: &Arc<Algebra<F>>, cutoff: usize, nonlinear: &mut Vec<String>) -> Result<bool> {
    let mut all = alg.graded;
    for i in 0..alg.n() {
        let r = Resolution::minimal(&Module::standard(alg, i)?, cutoff)?;
        if !r.is_linear() {
            all = false;
            nonlinear.push(format!("Δ({})", i + 1));
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{linear_quiver, Presentation};
    use crate::Rational;

    fn alg(n: usize, ell: usize) -> Arc<Algebra<Rational>> {
        Arc::new(Algebra::build(&linear_quiver::<Rational>(n, ell)).unwrap())
    }

    #[test]
    fn projective_has_trivial_resolution() {
        let a = alg(4, 3);
        let r = Resolution::minimal(&Module::projective(&a, 1).unwrap(), 5).unwrap();
        assert_eq!(r.length(), Some(0));
        assert!(r.complete);
        assert!(r.audit_exactness().unwrap());
    }

    #[test]
    fn simple_over_truncated_a5() {
        let a = alg(5, 3);
        let r = Resolution::minimal(&Module::simple(&a, 0).unwrap(), 6).unwrap();
        let vertices: Vec<Vec<usize>> = r.terms.iter().map(|t| t.iter().map(|s| s.vertex).collect()).collect();
        assert_eq!(vertices, vec![vec![0], vec![1], vec![3], vec![4]]);
        assert!(r.complete);
        assert!(r.is_minimal());
        assert!(r.audit_exactness().unwrap());
        assert!(!r.is_linear());
        assert_eq!(r.terms[2][0].shift, 3);
    }

    #[test]
    fn truncation_is_flagged() {
        let a = alg(5, 2);
        let r = Resolution::minimal(&Module::simple(&a, 0).unwrap(), 2).unwrap();
        assert!(!r.complete);
        assert!(r.knows_degree(1));
        assert!(r.require_degree(2).is_err());
        assert!(r.audit_exactness().unwrap());
    }

    #[test]
    fn induced_resolution_of_the_two_vertex_example() {
        let b: Presentation<Rational> = linear_quiver(2, 0);
        let de = DualExtension::new(&b, &b, None).unwrap();
        let rb = Resolution::minimal(&Module::simple(&de.b, 0).unwrap(), 4).unwrap();
        let rl = rb.induced(&de).unwrap();
        let vertices: Vec<Vec<usize>> = rl.terms.iter().map(|t| t.iter().map(|s| s.vertex).collect()).collect();
        assert_eq!(vertices, vec![vec![0], vec![1]]);
        assert!(rl.audit_exactness().unwrap());
        let direct = Resolution::minimal(&Module::standard(&de.lambda, 0).unwrap(), 4).unwrap();
        assert_eq!(direct.term_data(), rl.term_data());
    }

    #[test]
    fn koszul_examples() {
        let r = koszul_report(&alg(4, 2), 6, None, false).unwrap();
        assert!(r.koszul);
        let r = koszul_report(&alg(5, 3), 6, None, false).unwrap();
        assert!(!r.koszul);
        let hereditary = Resolution::minimal(&Module::simple(&alg(2, 0), 0).unwrap(), 3).unwrap();
        assert!(hereditary.is_linear());
    }
}
