//! Homotopy transfer of the dg-algebra `𝒟 = End(P^•)` to an A∞-structure on Ext.
//!
//! Elements of `𝒟` are handled blockwise: a block `(a, b, d)` is the space of degree-`d`
//! maps from the resolution of `X_a` to the resolution of `X_b`. Each block is split as
//! `H ⊕ ∂L ⊕ L`, which defines the projection `p`, the inclusion `i` and the homotopy `h`.
//! The higher products follow the recursion `hλ₁ = −id`,
//! `λₙ = Σ_{r+s=n} (−1)^{s+1} λ₂(hλ_r ⊗ hλ_s)`, `mₙ = p λₙ i^{⊗n}`.
//!
//! Tuples are written in composition order `(xₙ, …, x₁)`: `x₁` is applied first. Tensor
//! maps follow the Koszul rule `(f ⊗ g)(x ⊗ y) = (−1)^{|g||x|} f(x) ⊗ g(y)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, DualExtension, Elem};
use crate::error::{Error, Result};
use crate::ext::{differential, hom_class, DgElem, ExtClass, ExtTable};
use crate::linalg::sparse;
use crate::linalg::{complement, complement_in, Echelon, Matrix, PivotRule};
use crate::resolution::{ProjMap, Resolution};
use crate::scalar::Scalar;

/// How the complement `H` of the boundaries in the cycles is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplittingMode {
    /// `H` is spanned by the chain-map lifts stored in the Ext table.
    Lifted,
    /// `H` is an echelon complement of the boundaries inside the cycles.
    Echelon,
    /// Built from a splitting over the Borel subalgebra so that induction respects `p` and `h`.
    Compatible,
}

fn sign<F: Scalar>(odd: bool) -> F {
    if odd {
        -F::one()
    } else {
        F::one()
    }
}

/// Coordinates `(t, τ, σ, basis)` of a block: the entry from summand `σ` of `P_a^t` to summand
/// `τ` of `P_b^{t-d}`, expanded in the path basis of `e_{v_σ} Λ e_{w_τ}`.
#[derive(Debug)]
struct Coords {
    list: Vec<(usize, usize, usize, usize)>,
    index: HashMap<(usize, usize, usize, usize), usize>,
}

struct Block<F> {
    n_h: usize,
    n_b: usize,
    /// `v · inverse` gives coefficients over `[H; ∂L_{d-1}; L_d]`.
    inverse: Matrix<F>,
}

/// Data for the compatible splitting over a dual extension.
struct Compat<F> {
    base: Rc<Transfer<F>>,
    de: Arc<DualExtension<F>>,
}

/// The splitting of `𝒟`, the homotopy and the memoized higher products.
pub struct Transfer<F> {
    pub table: Arc<ExtTable<F>>,
    pub mode: SplittingMode,
    reps: RefCell<Vec<Option<DgElem<F>>>>,
    compat: Option<Compat<F>>,
    coords: RefCell<HashMap<(usize, usize, i64), Rc<Coords>>>,
    ells: RefCell<HashMap<(usize, usize, i64), Rc<Vec<Vec<F>>>>>,
    cycles: RefCell<HashMap<(usize, usize, i64), Rc<Matrix<F>>>>,
    blocks: RefCell<HashMap<(usize, usize, i64), Rc<Block<F>>>>,
    memo: RefCell<HashMap<Vec<usize>, Rc<DgElem<F>>>>,
    outputs: RefCell<HashMap<Vec<usize>, Option<ExtClass<F>>>>,
}

impl<F: Scalar> Transfer<F> {
    /// Plain splitting (`Lifted` or `Echelon`).
    pub fn new(table: Arc<ExtTable<F>>, mode: SplittingMode) -> Result<Self> {
        if mode == SplittingMode::Compatible {
            return Err(Error::Precondition("the compatible splitting needs a Borel-side transfer".into()));
        }
        let n = table.elements.len();
        let reps = match mode {
            SplittingMode::Lifted => table.lifts.iter().cloned().map(Some).collect(),
            _ => vec![None; n],
        };
        Ok(Self::with_reps(table, mode, reps, None))
    }

    /// Compatible splitting on `Λ = 𝒜(B, A^op)`, given a transfer over `B` for the simples.
    /// The Λ-table is built from the induced resolutions, and `H` is spanned by
    /// `g′ ∘ F(ε)` where `ε` runs over the B-side representatives and `g′` over paths of `A^op`.
    pub fn compatible(base: Rc<Transfer<F>>, de: Arc<DualExtension<F>>) -> Result<Self> {
        if base.mode == SplittingMode::Compatible {
            return Err(Error::Precondition("the Borel-side splitting must be plain".into()));
        }
        let res: Vec<Resolution<F>> = base.table.resolutions.iter().map(|r| r.induced(&de)).collect::<Result<_>>()?;
        let table = Arc::new(ExtTable::from_resolutions(res)?);
        let lam = de.lambda.clone();
        let mut reps = Vec::new();
        for (id, e) in table.elements.iter().enumerate() {
            let f = factor_standard_class(&table, &base.table, &de, id)?;
            let eps = base.rep(f.b_id)?;
            let lifted = eps.map_entries(|x| de.embed_b(x));
            let rep = hom_chain(&table, f.mid, e.tgt, &f.gamma).compose(&lam, &lifted)?;
            let class = table.class_of_chain(e.src, e.tgt, &rep)?;
            if !is_unit(&class.coeffs, e.index) {
                return Err(Error::Internal(format!("compatible representative of {} has the wrong class", e.label)));
            }
            reps.push(Some(rep));
        }
        Ok(Self::with_reps(table, SplittingMode::Compatible, reps, Some(Compat { base, de })))
    }

    fn with_reps(table: Arc<ExtTable<F>>, mode: SplittingMode, reps: Vec<Option<DgElem<F>>>, compat: Option<Compat<F>>) -> Self {
        Transfer {
            table,
            mode,
            reps: RefCell::new(reps),
            compat,
            coords: RefCell::default(),
            ells: RefCell::default(),
            cycles: RefCell::default(),
            blocks: RefCell::default(),
            memo: RefCell::default(),
            outputs: RefCell::default(),
        }
    }

    fn alg(&self) -> &Algebra<F> {
        &self.table.alg
    }

    fn res(&self, a: usize) -> &Resolution<F> {
        &self.table.resolutions[a]
    }

    /// All resolutions of the listed modules are complete, so every block involved is exact.
    pub fn is_exact_for(&self, modules: &[usize]) -> bool {
        modules.iter().all(|&m| self.res(m).complete)
    }

    fn coords(&self, a: usize, b: usize, d: i64) -> Rc<Coords> {
        if let Some(c) = self.coords.borrow().get(&(a, b, d)) {
            return c.clone();
        }
        let alg = self.alg();
        let (ra, rb) = (self.res(a), self.res(b));
        let mut list = Vec::new();
        for t in 0..ra.terms.len() {
            let s = t as i64 - d;
            if s < 0 || s as usize >= rb.terms.len() {
                continue;
            }
            for (sigma, ss) in ra.term(t).iter().enumerate() {
                for (tau, st) in rb.term(s as usize).iter().enumerate() {
                    for &basis in alg.between(ss.vertex, st.vertex) {
                        list.push((t, tau, sigma, basis));
                    }
                }
            }
        }
        let index = list.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let c = Rc::new(Coords { list, index });
        self.coords.borrow_mut().insert((a, b, d), c.clone());
        c
    }

    fn to_vec(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<Vec<F>> {
        let c = self.coords(a, b, f.deg);
        let mut v = vec![F::zero(); c.list.len()];
        for (&t, m) in &f.comps {
            for (tau, sigma, e) in m.nonzero_entries() {
                for (&basis, x) in e {
                    let k = *c
                        .index
                        .get(&(t, tau, sigma, basis))
                        .ok_or_else(|| Error::Internal(format!("component at position {t} outside the block")))?;
                    v[k] = x.clone();
                }
            }
        }
        Ok(v)
    }

    fn from_vec(&self, a: usize, b: usize, d: i64, v: &[F]) -> DgElem<F> {
        let c = self.coords(a, b, d);
        let (ra, rb) = (self.res(a), self.res(b));
        let mut f = DgElem::zero(d);
        for (x, &(t, tau, sigma, basis)) in v.iter().zip(&c.list) {
            if x.is_zero() {
                continue;
            }
            let m = f
                .comps
                .entry(t)
                .or_insert_with(|| ProjMap::zero(rb.term((t as i64 - d) as usize).len(), ra.term(t).len()));
            m.add_to(tau, sigma, x, &sparse::unit(basis));
        }
        f
    }

    /// Matrix of `∂ : 𝒟^d → 𝒟^{d+1}` on the block, as columns.
    fn boundary_matrix(&self, a: usize, b: usize, d: i64) -> Result<Matrix<F>> {
        let src = self.coords(a, b, d);
        let tgt = self.coords(a, b, d + 1);
        let mut m = Matrix::zeros(tgt.list.len(), src.list.len());
        for col in 0..src.list.len() {
            let mut e = vec![F::zero(); src.list.len()];
            e[col] = F::one();
            let f = self.from_vec(a, b, d, &e);
            let df = differential(self.alg(), self.res(a), self.res(b), &f)?;
            for (r, x) in self.to_vec(a, b, &df)?.into_iter().enumerate() {
                m[(r, col)] = x;
            }
        }
        Ok(m)
    }

    /// Cycles of the block, as RREF rows.
    fn cycles(&self, a: usize, b: usize, d: i64) -> Result<Rc<Matrix<F>>> {
        if let Some(z) = self.cycles.borrow().get(&(a, b, d)) {
            return Ok(z.clone());
        }
        let dim = self.coords(a, b, d).list.len();
        let m = self.boundary_matrix(a, b, d)?;
        let z = Rc::new(if m.rows() == 0 { Matrix::identity(dim) } else { m.kernel() });
        self.cycles.borrow_mut().insert((a, b, d), z.clone());
        Ok(z)
    }

    /// Basis of `L_d`, a complement of the cycles.
    fn ells(&self, a: usize, b: usize, d: i64) -> Result<Rc<Vec<Vec<F>>>> {
        if let Some(l) = self.ells.borrow().get(&(a, b, d)) {
            return Ok(l.clone());
        }
        let z = self.cycles(a, b, d)?;
        let dim = self.coords(a, b, d).list.len();
        let l = match &self.compat {
            None => complement(&z).row_vecs(),
            Some(c) => {
                // F(L^B_d), then an echelon complement of the cycles plus that image.
                let base_l = c.base.ells(a, b, d)?;
                let mut lifted = Vec::new();
                for v in base_l.iter() {
                    let f = c.base.from_vec(a, b, d, v).map_entries(|x| c.de.embed_b(x));
                    lifted.push(self.to_vec(a, b, &f)?);
                }
                let mut rows = z.row_vecs();
                rows.extend(lifted.iter().cloned());
                let rest = complement_in(&Matrix::from_rows(dim, rows), &Matrix::identity(dim))?;
                lifted.extend(rest.row_vecs());
                lifted
            }
        };
        let l = Rc::new(l);
        self.ells.borrow_mut().insert((a, b, d), l.clone());
        Ok(l)
    }

    /// Representative in `H` of a basis element (the image under `i`).
    pub fn rep(&self, id: usize) -> Result<DgElem<F>> {
        if let Some(r) = &self.reps.borrow()[id] {
            return Ok(r.clone());
        }
        let e = self.table.elements[id].clone();
        self.echelon_reps(e.src, e.tgt, e.deg as i64)?;
        Ok(self.reps.borrow()[id].clone().expect("representative"))
    }

    /// Echelon complement of the boundaries in the cycles, rescaled so that the classes are
    /// the basis of the Ext table.
    fn echelon_reps(&self, a: usize, b: usize, d: i64) -> Result<()> {
        let dim = self.coords(a, b, d).list.len();
        let mut ech = Echelon::new(dim, PivotRule::First);
        for v in self.boundaries(a, b, d)? {
            ech.insert(v);
        }
        let mut h = Vec::new();
        for v in self.cycles(a, b, d)?.row_vecs() {
            if ech.insert(v.clone()).is_some() {
                h.push(v);
            }
        }
        let ids = self.table.ids(a, b, d as usize).to_vec();
        if h.len() != ids.len() {
            return Err(Error::Internal("cohomology of 𝒟 differs from Ext".into()));
        }
        let mut classes = Matrix::zeros(h.len(), h.len());
        for (r, v) in h.iter().enumerate() {
            let f = self.from_vec(a, b, d, v);
            let c = self.table.class_of_chain(a, b, &f)?;
            for (k, x) in c.coeffs.into_iter().enumerate() {
                classes[(r, k)] = x;
            }
        }
        let inv = classes.inverse().ok_or_else(|| Error::Internal("singular class matrix".into()))?;
        let mut reps = self.reps.borrow_mut();
        for (k, &id) in ids.iter().enumerate() {
            let mut v = vec![F::zero(); dim];
            for (r, hv) in h.iter().enumerate() {
                let c = inv[(k, r)].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(hv) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
            reps[id] = Some(self.from_vec(a, b, d, &v));
        }
        Ok(())
    }

    /// `∂(L_{d-1})`, a basis of the boundaries in degree `d`.
    fn boundaries(&self, a: usize, b: usize, d: i64) -> Result<Vec<Vec<F>>> {
        let l = self.ells(a, b, d - 1)?;
        let mut out = Vec::new();
        for v in l.iter() {
            let f = self.from_vec(a, b, d - 1, v);
            let df = differential(self.alg(), self.res(a), self.res(b), &f)?;
            out.push(self.to_vec(a, b, &df)?);
        }
        Ok(out)
    }

    fn block(&self, a: usize, b: usize, d: i64) -> Result<Rc<Block<F>>> {
        if let Some(bl) = self.blocks.borrow().get(&(a, b, d)) {
            return Ok(bl.clone());
        }
        let dim = self.coords(a, b, d).list.len();
        let mut rows = Vec::new();
        if d >= 0 && self.table.knows(a, d as usize) {
            for &id in self.table.ids(a, b, d as usize) {
                rows.push(self.to_vec(a, b, &self.rep(id)?)?);
            }
        }
        let n_h = rows.len();
        let bnd = self.boundaries(a, b, d)?;
        let n_b = bnd.len();
        rows.extend(bnd);
        rows.extend(self.ells(a, b, d)?.iter().cloned());
        if rows.len() != dim {
            return Err(Error::Internal(format!(
                "splitting of block ({},{}) in degree {d} has {} vectors for dimension {dim}",
                a + 1,
                b + 1,
                rows.len()
            )));
        }
        let inverse = Matrix::from_rows(dim, rows)
            .inverse()
            .ok_or_else(|| Error::Internal(format!("splitting of block ({},{}) in degree {d} is not direct", a + 1, b + 1)))?;
        let bl = Rc::new(Block { n_h, n_b, inverse });
        self.blocks.borrow_mut().insert((a, b, d), bl.clone());
        Ok(bl)
    }

    /// Coefficients of `f` over `[H; ∂L; L]`.
    fn decompose(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<(Rc<Block<F>>, Vec<F>)> {
        let bl = self.block(a, b, f.deg)?;
        let v = self.to_vec(a, b, f)?;
        let x = if v.is_empty() { Vec::new() } else { bl.inverse.apply_left(&v) };
        Ok((bl, x))
    }

    /// The projection `p : 𝒟 → Ext` on a block element from `X_a` to `X_b`.
    pub fn project(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<ExtClass<F>> {
        let d = f.deg;
        if d < 0 || !self.table.knows(a, d as usize) {
            return Ok(ExtClass { src: a, tgt: b, deg: d.max(0) as usize, coeffs: Vec::new() });
        }
        let (bl, x) = self.decompose(a, b, f)?;
        Ok(ExtClass { src: a, tgt: b, deg: d as usize, coeffs: x[..bl.n_h].to_vec() })
    }

    /// The homotopy: zero on `H ⊕ L`, `∂⁻¹` on the boundaries.
    pub fn apply_h(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<DgElem<F>> {
        let d = f.deg;
        let (bl, x) = self.decompose(a, b, f)?;
        let l = self.ells(a, b, d - 1)?;
        let dim = self.coords(a, b, d - 1).list.len();
        let mut v = vec![F::zero(); dim];
        for (c, lv) in x[bl.n_h..bl.n_h + bl.n_b].iter().zip(l.iter()) {
            if c.is_zero() {
                continue;
            }
            for (y, z) in v.iter_mut().zip(lv) {
                *y = y.clone() + c.clone() * z.clone();
            }
        }
        Ok(self.from_vec(a, b, d - 1, &v))
    }

    /// `∂` on a block element.
    pub fn boundary(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<DgElem<F>> {
        differential(self.alg(), self.res(a), self.res(b), f)
    }

    /// Dimension of the block `𝒟^d(X_a, X_b)`.
    pub fn block_dim(&self, a: usize, b: usize, d: i64) -> usize {
        self.coords(a, b, d).list.len()
    }

    /// The `k`-th coordinate basis element of a block.
    pub fn block_unit(&self, a: usize, b: usize, d: i64, k: usize) -> DgElem<F> {
        let mut v = vec![F::zero(); self.block_dim(a, b, d)];
        v[k] = F::one();
        self.from_vec(a, b, d, &v)
    }

    /// Block element from coordinates.
    pub fn block_elem(&self, a: usize, b: usize, d: i64, v: &[F]) -> DgElem<F> {
        self.from_vec(a, b, d, v)
    }

    /// Coordinates of a block element.
    pub fn block_coords(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<Vec<F>> {
        self.to_vec(a, b, f)
    }

    /// `dim H^d` of the block, computed from the cycles and boundaries.
    pub fn cohomology_dim(&self, a: usize, b: usize, d: i64) -> Result<usize> {
        let z = self.cycles(a, b, d)?.rows();
        let bnd = self.boundaries(a, b, d)?;
        let rank = if bnd.is_empty() { 0 } else { Matrix::from_rows(self.block_dim(a, b, d), bnd).rank() };
        Ok(z - rank)
    }

    /// The representative `i(p(f))` of the cohomology part of `f`.
    pub fn include_projection(&self, a: usize, b: usize, f: &DgElem<F>) -> Result<DgElem<F>> {
        let c = self.project(a, b, f)?;
        let mut out = DgElem::zero(f.deg);
        for (x, &id) in c.coeffs.iter().zip(self.table.ids(a, b, c.deg)) {
            if !x.is_zero() {
                out.add_scaled(x, &self.rep(id)?);
            }
        }
        Ok(out)
    }

    /// Splitting axioms on one block: `f = ip(f) + ∂h(f) + h∂(f)` for every basis element,
    /// `h` vanishes on `H ⊕ L`, `h∂ = id` on `L` and `hh = 0`.
    pub fn check_splitting(&self, a: usize, b: usize, d: i64) -> Result<bool> {
        let dim = self.block_dim(a, b, d);
        for k in 0..dim {
            let f = self.block_unit(a, b, d, k);
            let mut sum = self.include_projection(a, b, &f)?;
            sum.add_scaled(&F::one(), &self.boundary(a, b, &self.apply_h(a, b, &f)?)?);
            sum.add_scaled(&F::one(), &self.apply_h(a, b, &self.boundary(a, b, &f)?)?);
            sum.add_scaled(&-F::one(), &f);
            if !sum.pruned().is_zero() {
                return Ok(false);
            }
            let hh = self.apply_h(a, b, &self.apply_h(a, b, &f)?)?;
            if !hh.pruned().is_zero() {
                return Ok(false);
            }
        }
        for v in self.ells(a, b, d)?.iter() {
            let g = self.from_vec(a, b, d, v);
            if !self.apply_h(a, b, &g)?.pruned().is_zero() {
                return Ok(false);
            }
            let back = self.apply_h(a, b, &self.boundary(a, b, &g)?)?;
            if self.to_vec(a, b, &back)? != *v {
                return Ok(false);
            }
        }
        if d >= 0 && self.table.knows(a, d as usize) {
            for &id in self.table.ids(a, b, d as usize) {
                if !self.apply_h(a, b, &self.rep(id)?)?.pruned().is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Written-order tuple `(xₙ, …, x₁)` of basis ids is composable.
    pub fn composable(&self, tuple: &[usize]) -> bool {
        let el = &self.table.elements;
        tuple.windows(2).all(|w| el[w[1]].tgt == el[w[0]].src)
    }

    fn endpoints(&self, tuple: &[usize]) -> (usize, usize) {
        let el = &self.table.elements;
        (el[*tuple.last().expect("nonempty")].src, el[tuple[0]].tgt)
    }

    fn modules_of(&self, tuple: &[usize]) -> Vec<usize> {
        let el = &self.table.elements;
        let mut m: Vec<usize> = tuple.iter().map(|&x| el[x].tgt).collect();
        m.push(el[*tuple.last().expect("nonempty")].src);
        m
    }

    fn degree_sum(&self, tuple: &[usize]) -> i64 {
        tuple.iter().map(|&x| self.table.elements[x].deg as i64).sum()
    }

    /// `hλₙ` on a basis tuple (memoized).
    pub fn h_lambda(&self, tuple: &[usize]) -> Result<Rc<DgElem<F>>> {
        if let Some(v) = self.memo.borrow().get(tuple) {
            return Ok(v.clone());
        }
        let out = if tuple.len() == 1 {
            self.rep(tuple[0])?.scale(&-F::one())
        } else {
            let (a, b) = self.endpoints(tuple);
            self.apply_h(a, b, &self.lambda(tuple)?)?
        };
        let out = Rc::new(out);
        self.memo.borrow_mut().insert(tuple.to_vec(), out.clone());
        Ok(out)
    }

    /// `λₙ` on a basis tuple of length `n ≥ 2`.
    pub fn lambda(&self, tuple: &[usize]) -> Result<DgElem<F>> {
        let n = tuple.len();
        if n < 2 {
            return Err(Error::Precondition("λ needs at least two inputs".into()));
        }
        let deg = self.degree_sum(tuple) + 2 - n as i64;
        let mut acc = DgElem::zero(deg);
        for s in 1..n {
            let r = n - s;
            let (left, right) = tuple.split_at(r);
            // Koszul sign of moving hλ_s (degree 1 − s) past the first r inputs.
            let koszul = ((1 - s as i64) * self.degree_sum(left)).rem_euclid(2) == 1;
            let c: F = sign::<F>((s + 1) % 2 == 1) * sign::<F>(koszul);
            let prod = self.h_lambda(left)?.compose(self.alg(), &*self.h_lambda(right)?)?;
            acc.add_scaled(&c, &prod);
        }
        Ok(acc)
    }

    /// `mₙ` on a composable basis tuple, or `None` when a resolution involved is truncated.
    pub fn m(&self, tuple: &[usize]) -> Result<Option<ExtClass<F>>> {
        if !self.composable(tuple) {
            return Err(Error::Precondition("inputs are not composable".into()));
        }
        if let Some(v) = self.outputs.borrow().get(tuple) {
            return Ok(v.clone());
        }
        let (a, b) = self.endpoints(tuple);
        let n = tuple.len();
        let deg = self.degree_sum(tuple) + 2 - n as i64;
        let out = if !self.is_exact_for(&self.modules_of(tuple)) {
            None
        } else if n == 1 {
            Some(ExtClass { src: a, tgt: b, deg: deg as usize, coeffs: vec![F::zero(); self.table.ids(a, b, deg as usize).len()] })
        } else if deg < 0 {
            Some(ExtClass { src: a, tgt: b, deg: 0, coeffs: Vec::new() })
        } else {
            let mut c = self.project(a, b, &self.lambda(tuple)?)?;
            c.coeffs.resize(self.table.ids(a, b, deg as usize).len(), F::zero());
            Some(c)
        };
        self.outputs.borrow_mut().insert(tuple.to_vec(), out.clone());
        Ok(out)
    }

    /// All composable written-order tuples of basis ids of length `n`.
    pub fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let el = &self.table.elements;
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        fn go(el: &[crate::ext::ExtBasisElem], n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for (id, e) in el.iter().enumerate() {
                if let Some(&last) = cur.last() {
                    if e.tgt != el[last].src {
                        continue;
                    }
                }
                cur.push(id);
                go(el, n, cur, out);
                cur.pop();
            }
        }
        go(el, n, &mut cur, &mut out);
        out
    }

    /// Structure constants of `m₂, …, m_{max_arity}` on every composable basis tuple.
    pub fn operations(&self, max_arity: usize, include_units: bool) -> Result<AInfOps> {
        let mut entries = Vec::new();
        for n in 2..=max_arity {
            for t in self.tuples(n) {
                if !include_units && n > 2 && t.iter().any(|&x| self.is_unit_element(x)) {
                    continue;
                }
                let out = self.m(&t)?;
                if let Some(c) = &out {
                    if c.coeffs.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                }
                entries.push(self.entry(&t, out.as_ref()));
            }
        }
        Ok(AInfOps { algebra: self.table.alg.name.clone(), mode: self.mode, max_arity, entries })
    }

    fn entry(&self, tuple: &[usize], out: Option<&ExtClass<F>>) -> AInfEntry {
        let el = &self.table.elements;
        AInfEntry {
            arity: tuple.len(),
            inputs: tuple.iter().map(|&x| el[x].label.clone()).collect(),
            output: out
                .map(|c| {
                    c.coeffs
                        .iter()
                        .zip(self.table.ids(c.src, c.tgt, c.deg))
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, &g)| (el[g].label.clone(), x.to_string()))
                        .collect()
                })
                .unwrap_or_default(),
            valid: out.is_some(),
        }
    }

    /// The degree-0 identity class of some module (up to scalar).
    pub fn is_unit_element(&self, id: usize) -> bool {
        let e = &self.table.elements[id];
        e.deg == 0 && e.src == e.tgt && self.table.ids(e.src, e.tgt, 0).len() == 1
    }

    /// Express `mₙ` on a tuple of classes by multilinearity; `None` if any needed entry is
    /// invalid.
    fn m_multilinear(&self, inputs: &[Vec<(usize, F)>]) -> Result<Option<BTreeMap<usize, F>>> {
        let mut out: BTreeMap<usize, F> = BTreeMap::new();
        let mut idx = vec![0usize; inputs.len()];
        if inputs.iter().any(|v| v.is_empty()) {
            return Ok(Some(out));
        }
        loop {
            let tuple: Vec<usize> = idx.iter().zip(inputs).map(|(&i, v)| v[i].0).collect();
            let coeff = idx.iter().zip(inputs).fold(F::one(), |acc, (&i, v)| acc * v[i].1.clone());
            if self.composable(&tuple) {
                match self.m(&tuple)? {
                    None => return Ok(None),
                    Some(c) => {
                        for (x, &g) in c.coeffs.iter().zip(self.table.ids(c.src, c.tgt, c.deg)) {
                            if !x.is_zero() {
                                let e = out.entry(g).or_insert_with(F::zero);
                                *e = e.clone() + coeff.clone() * x.clone();
                            }
                        }
                    }
                }
            }
            let mut k = inputs.len();
            loop {
                if k == 0 {
                    out.retain(|_, v| !v.is_zero());
                    return Ok(Some(out));
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < inputs[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    /// Stasheff identity on one written-order tuple:
    /// `Σ (−1)^{r+st} m_{r+1+t}(id^{⊗r} ⊗ m_s ⊗ id^{⊗t}) = 0` with Koszul signs.
    /// Returns `None` when an entry involved is invalid.
    pub fn stasheff_defect(&self, tuple: &[usize]) -> Result<Option<BTreeMap<usize, F>>> {
        let n = tuple.len();
        let mut total: BTreeMap<usize, F> = BTreeMap::new();
        for s in 2..n {
            for r in 0..=n - s {
                let t = n - s - r;
                let inner = &tuple[r..r + s];
                let Some(mid) = self.m(inner)? else { return Ok(None) };
                let mid_terms: Vec<(usize, F)> = mid
                    .coeffs
                    .iter()
                    .zip(self.table.ids(mid.src, mid.tgt, mid.deg))
                    .filter(|(x, _)| !x.is_zero())
                    .map(|(x, &g)| (g, x.clone()))
                    .collect();
                let odd = (r + s * t) % 2 == 1;
                let koszul = ((2 - s as i64) * self.degree_sum(&tuple[..r])).rem_euclid(2) == 1;
                let c: F = sign::<F>(odd) * sign::<F>(koszul);
                let mut inputs: Vec<Vec<(usize, F)>> = tuple[..r].iter().map(|&x| vec![(x, F::one())]).collect();
                inputs.push(mid_terms);
                inputs.extend(tuple[r + s..].iter().map(|&x| vec![(x, F::one())]));
                let Some(val) = self.m_multilinear(&inputs)? else { return Ok(None) };
                for (g, x) in val {
                    let e = total.entry(g).or_insert_with(F::zero);
                    *e = e.clone() + c.clone() * x;
                }
            }
        }
        total.retain(|_, v| !v.is_zero());
        Ok(Some(total))
    }

    /// Check the Stasheff identities for arities `3..=max_arity` on all composable tuples.
    pub fn verify_stasheff(&self, max_arity: usize) -> Result<StasheffReport> {
        let mut checked = 0;
        let mut skipped = 0;
        let mut violations = Vec::new();
        for n in 3..=max_arity {
            for t in self.tuples(n) {
                match self.stasheff_defect(&t)? {
                    None => skipped += 1,
                    Some(d) if d.is_empty() => checked += 1,
                    Some(_) => {
                        checked += 1;
                        violations.push(t.iter().map(|&x| self.table.elements[x].label.clone()).collect());
                    }
                }
            }
        }
        Ok(StasheffReport { max_arity, checked, skipped, holds: violations.is_empty(), violations })
    }

    /// Every valid `mₙ` output has internal degree equal to the sum of the inputs' degrees.
    pub fn check_internal_degrees(&self, max_arity: usize) -> Result<bool> {
        let el = &self.table.elements;
        for n in 2..=max_arity {
            for t in self.tuples(n) {
                let Some(c) = self.m(&t)? else { continue };
                let d: i64 = t.iter().map(|&x| el[x].internal_degree).sum();
                for (x, &g) in c.coeffs.iter().zip(self.table.ids(c.src, c.tgt, c.deg)) {
                    if !x.is_zero() && el[g].internal_degree != d {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The Borel-side transfer of a compatible splitting.
    pub fn base(&self) -> Option<&Rc<Transfer<F>>> {
        self.compat.as_ref().map(|c| &c.base)
    }

    pub fn dual_extension(&self) -> Option<&Arc<DualExtension<F>>> {
        self.compat.as_ref().map(|c| &c.de)
    }

    /// `F` applied to a Borel-side block element.
    pub fn induce(&self, f: &DgElem<F>) -> Result<DgElem<F>> {
        let c = self.compat.as_ref().ok_or_else(|| Error::Precondition("not a compatible splitting".into()))?;
        Ok(f.map_entries(|x| c.de.embed_b(x)))
    }

    /// `F` on Ext classes, from the Borel-side table to this table.
    pub fn induce_class(&self, x: &ExtClass<F>) -> Result<ExtClass<F>> {
        let c = self.compat.as_ref().ok_or_else(|| Error::Precondition("not a compatible splitting".into()))?;
        let mut out = ExtClass { src: x.src, tgt: x.tgt, deg: x.deg, coeffs: vec![F::zero(); self.table.ids(x.src, x.tgt, x.deg).len()] };
        for (coef, &id) in x.coeffs.iter().zip(c.base.table.ids(x.src, x.tgt, x.deg)) {
            if coef.is_zero() {
                continue;
            }
            let img = self.table.class_of_chain(x.src, x.tgt, &self.induce(&c.base.table.lifts[id])?)?;
            for (o, y) in out.coeffs.iter_mut().zip(img.coeffs) {
                *o = o.clone() + coef.clone() * y;
            }
        }
        Ok(out)
    }

    /// Basis id of `F(ε)` for a Borel-side basis element `ε` (a single basis element here).
    pub fn induced_id(&self, b_id: usize) -> Result<usize> {
        let c = self.compat.as_ref().ok_or_else(|| Error::Precondition("not a compatible splitting".into()))?;
        let e = &c.base.table.elements[b_id];
        let cls = self.induce_class(&c.base.table.basis_class(b_id))?;
        let ids = self.table.ids(e.src, e.tgt, e.deg);
        let k = cls.coeffs.iter().position(|x| !x.is_zero()).ok_or_else(|| Error::Internal("F kills a class".into()))?;
        if !is_unit(&cls.coeffs, k) {
            return Err(Error::Internal("F(ε) is not a basis element".into()));
        }
        Ok(ids[k])
    }
}

/// Equal coefficient vectors, where an empty vector (a negative-degree target) is zero.
fn same_class<F: Scalar>(x: &[F], y: &[F]) -> bool {
    if x.is_empty() || y.is_empty() {
        return x.iter().chain(y).all(|c| c.is_zero());
    }
    x == y
}

fn is_unit<F: Scalar>(v: &[F], k: usize) -> bool {
    v.iter().enumerate().all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() })
}

/// The chain map between standard resolutions lifting `Δ(v) → Δ(j)`, top ↦ `γ · top`, for an
/// `A^op`-path `γ` from `j` to `v`: the identity when `γ = e_j`, otherwise the map with the
/// single component `ρ_γ : P(v) → P(j)` in position 0.
pub fn hom_chain<F: Scalar>(table: &ExtTable<F>, v: usize, j: usize, gamma: &Elem<F>) -> DgElem<F> {
    let alg = &table.alg;
    let mut f = DgElem::zero(0);
    let is_idem = gamma.len() == 1 && gamma.keys().next() == Some(&alg.idempotent(j)) && v == j;
    if is_idem {
        let c = gamma.values().next().expect("coefficient").clone();
        for (t, term) in table.resolutions[v].terms.iter().enumerate() {
            if !term.is_empty() {
                f.comps.insert(t, ProjMap::identity(alg, term).scale(&c));
            }
        }
    } else {
        let mut m = ProjMap::zero(1, 1);
        m.set(0, 0, gamma.clone());
        f.comps.insert(0, m);
    }
    f
}

/// A basis element of `Ext^k_Λ(Δ(i), Δ(j))` written as `g′_γ ∘ F(ε)`.
#[derive(Clone, Debug)]
pub struct Factored<F> {
    /// Vertex `v` where the factorization passes.
    pub mid: usize,
    /// `γ ∈ e_v Λ e_j`, an `A^op`-path from `j` to `v`.
    pub gamma: Elem<F>,
    /// Borel-side basis id of `ε ∈ Ext^k_B(L(i), L(v))`.
    pub b_id: usize,
}

/// Factor a basis element of the standard Ext table of a dual extension. The table must come
/// from induced resolutions, so that the representing cocycles are supported on single
/// summands; `base` is the Borel-side table of the simples on the same terms.
pub fn factor_standard_class<F: Scalar>(
    table: &ExtTable<F>,
    base: &ExtTable<F>,
    de: &DualExtension<F>,
    id: usize,
) -> Result<Factored<F>> {
    let e = &table.elements[id];
    let space = table.space(e.src, e.tgt, e.deg).ok_or_else(|| Error::Internal("missing Ext space".into()))?;
    let v = &space.basis[e.index];
    let c = v.iter().position(|x| !x.is_zero()).ok_or_else(|| Error::Internal("zero basis vector".into()))?;
    if !is_unit(v, c) {
        return Err(Error::Internal("standard Ext basis is not supported on one coordinate".into()));
    }
    let (sigma, m) = space.cochains.coords[c];
    let mid = table.resolutions[e.src].term(e.deg)[sigma].vertex;
    // γ with γ · top(Δ(j)) equal to basis vector m of Δ(j) at vertex mid.
    let rj = &table.resolutions[e.tgt];
    let y = &rj.module;
    let mut gamma = None;
    for p in de.aop_paths_from(e.tgt) {
        if table.alg.basis_elem(p).tgt() != mid {
            continue;
        }
        let img = y.act_flat(&sparse::unit(p), &rj.aug[0]);
        if is_unit(&img[y.offset(mid)..y.offset(mid) + y.dims[mid]], m) {
            gamma = Some(sparse::unit(p));
            break;
        }
    }
    let gamma = gamma.ok_or_else(|| Error::Internal("standard module basis vector is not an A^op-path".into()))?;
    // ε is the Borel-side basis element with unit cocycle at σ.
    let bspace = base.space(e.src, mid, e.deg).ok_or_else(|| Error::Internal("missing Borel Ext space".into()))?;
    let col = bspace
        .cochains
        .coords
        .iter()
        .position(|&(s, _)| s == sigma)
        .ok_or_else(|| Error::Internal("summand missing from Borel cochains".into()))?;
    let k = bspace
        .basis
        .iter()
        .position(|b| is_unit(b, col))
        .ok_or_else(|| Error::Internal("Borel Ext basis is not the unit basis".into()))?;
    Ok(Factored { mid, gamma, b_id: base.ids(e.src, mid, e.deg)[k] })
}

/// Higher products on standard modules from the Borel side alone. For basis elements
/// `f′ₖ ∘ F(εₖ)` in written order `(f′ₙεₙ, …, f′₁ε₁)` with `n ≥ 3`: zero when some `f′ₖ` with
/// `k < n` is radical, and otherwise `± f′ₙ F(p^B(εₙ ∘ h^B λ^B_{n−1}(εₙ₋₁, …, ε₁)))` times the
/// scalars of the identity factors. The sign is `(−1)^{n+1}` corrected by the Koszul factor
/// `(−1)^{n|εₙ|}` of the only surviving term `λ₂(hλ₁ ⊗ hλ_{n−1})`. For `n = 2` this is the
/// Yoneda product. `None` when an entry involved is invalid.
pub fn shortcut_standard_mn<F: Scalar>(lt: &Transfer<F>, tuple: &[usize]) -> Result<Option<ExtClass<F>>> {
    let base = lt.base().ok_or_else(|| Error::Precondition("the shortcut needs a compatible splitting".into()))?;
    let de = lt.dual_extension().expect("compatible");
    if !lt.composable(tuple) {
        return Err(Error::Precondition("inputs are not composable".into()));
    }
    let n = tuple.len();
    let (a, b) = lt.endpoints(tuple);
    let deg = lt.degree_sum(tuple) + 2 - n as i64;
    let zero = |d: i64| ExtClass {
        src: a,
        tgt: b,
        deg: d.max(0) as usize,
        coeffs: if d < 0 { Vec::new() } else { vec![F::zero(); lt.table.ids(a, b, d as usize).len()] },
    };
    let factors: Vec<Factored<F>> =
        tuple.iter().map(|&x| factor_standard_class(&lt.table, &base.table, de, x)).collect::<Result<_>>()?;
    if !lt.is_exact_for(&lt.modules_of(tuple)) {
        return Ok(None);
    }
    if n < 2 || deg < 0 {
        return Ok(Some(zero(deg)));
    }
    if n == 2 {
        let x = lt.table.basis_class(tuple[0]);
        let y = lt.table.basis_class(tuple[1]);
        return Ok(Some(lt.table.yoneda(&x, &y)?));
    }
    let alg = &lt.table.alg;
    let mut scalar = F::one();
    for f in &factors[1..] {
        if alg.in_radical(&f.gamma) {
            return Ok(Some(zero(deg)));
        }
        scalar = scalar * f.gamma.values().next().expect("coefficient").clone();
    }
    let b_ids: Vec<usize> = factors.iter().map(|f| f.b_id).collect();
    let inner = base.h_lambda(&b_ids[1..])?;
    let top = factors[0].mid;
    let comp = base.rep(b_ids[0])?.compose(&base.table.alg, &inner)?;
    let pb = base.project(a, top, &comp)?;
    if pb.coeffs.iter().all(|x| x.is_zero()) {
        return Ok(Some(zero(deg)));
    }
    let induced = lt.induce_class(&pb)?;
    let g = hom_class(&lt.table, top, b, &factors[0].gamma)?;
    let mut out = lt.table.yoneda(&g, &induced)?;
    let eps_deg = base.table.elements[b_ids[0]].deg;
    let c = scalar * sign::<F>((n + 1 + n * eps_deg) % 2 == 1);
    for x in out.coeffs.iter_mut() {
        *x = x.clone() * c.clone();
    }
    Ok(Some(out))
}

/// Outcome of the compatibility checks of a compatible splitting.
#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityReport {
    pub max_arity: usize,
    /// `F(mₙ^B(ε…)) = mₙ^Λ(F(ε)…)` on every composable Borel-side tuple.
    pub embedding: bool,
    /// The shortcut agrees with the direct transfer on every composable Λ-side tuple.
    pub shortcut: bool,
    pub checked: usize,
    pub mismatches: Vec<Vec<String>>,
}

/// Run both compatibility checks up to `max_arity`.
pub fn verify_compatibility<F: Scalar>(lt: &Transfer<F>, max_arity: usize) -> Result<CompatibilityReport> {
    let base = lt.base().ok_or_else(|| Error::Precondition("not a compatible splitting".into()))?;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut embedding = true;
    for n in 2..=max_arity {
        for t in base.tuples(n) {
            let (Some(mb), true) = (base.m(&t)?, lt.is_exact_for(&base.modules_of(&t))) else { continue };
            let lifted: Vec<usize> = t.iter().map(|&x| lt.induced_id(x)).collect::<Result<_>>()?;
            let Some(ml) = lt.m(&lifted)? else { continue };
            checked += 1;
            if !same_class(&lt.induce_class(&mb)?.coeffs, &ml.coeffs) {
                embedding = false;
                mismatches.push(t.iter().map(|&x| base.table.elements[x].label.clone()).collect());
            }
        }
    }
    let mut shortcut = true;
    for n in 2..=max_arity {
        for t in lt.tuples(n) {
            let (Some(direct), Some(short)) = (lt.m(&t)?, shortcut_standard_mn(lt, &t)?) else { continue };
            checked += 1;
            if !same_class(&direct.coeffs, &short.coeffs) {
                shortcut = false;
                mismatches.push(t.iter().map(|&x| lt.table.elements[x].label.clone()).collect());
            }
        }
    }
    Ok(CompatibilityReport { max_arity, embedding, shortcut, checked, mismatches })
}

/// An A∞ structure as a list of nonzero (or invalid) structure constants.
#[derive(Clone, Debug, Serialize)]
pub struct AInfOps {
    pub algebra: String,
    pub mode: SplittingMode,
    pub max_arity: usize,
    pub entries: Vec<AInfEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AInfEntry {
    pub arity: usize,
    /// Written order `(xₙ, …, x₁)`.
    pub inputs: Vec<String>,
    pub output: Vec<(String, String)>,
    pub valid: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StasheffReport {
    pub max_arity: usize,
    pub checked: usize,
    pub skipped: usize,
    pub holds: bool,
    pub violations: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::Family;
    use crate::presentation::linear_quiver;
    use crate::Rational;
    use num_traits::Zero;

    type Q = Rational;

    fn simples(n: usize, ell: usize) -> Arc<ExtTable<Q>> {
        let b = Arc::new(Algebra::build(&linear_quiver::<Q>(n, ell)).unwrap());
        Arc::new(ExtTable::build(&b, Family::Simples, 10).unwrap())
    }

    fn higher_nonzero(tr: &Transfer<Q>, max: usize) -> Vec<Vec<String>> {
        let ops = tr.operations(max, true).unwrap();
        ops.entries.into_iter().filter(|e| e.arity > 2).map(|e| e.inputs).collect()
    }

    #[test]
    fn differential_squares_to_zero_and_satisfies_leibniz() {
        let t = simples(3, 0);
        let tr = Transfer::new(t.clone(), SplittingMode::Lifted).unwrap();
        let n = t.n();
        for a in 0..n {
            for b in 0..n {
                for d in -2..=2 {
                    for k in 0..tr.block_dim(a, b, d) {
                        let f = tr.block_unit(a, b, d, k);
                        let dd = tr.boundary(a, b, &tr.boundary(a, b, &f).unwrap()).unwrap();
                        assert!(dd.pruned().is_zero());
                    }
                }
            }
        }
        // Leibniz on basis pairs P_0 → P_1 → P_2.
        let alg = tr.alg().clone();
        for d1 in -1..=1 {
            for d2 in -1..=1 {
                for k1 in 0..tr.block_dim(1, 2, d1) {
                    for k2 in 0..tr.block_dim(0, 1, d2) {
                        let f = tr.block_unit(1, 2, d1, k1);
                        let g = tr.block_unit(0, 1, d2, k2);
                        let lhs = tr.boundary(0, 2, &f.compose(&alg, &g).unwrap()).unwrap();
                        let mut rhs = tr.boundary(1, 2, &f).unwrap().compose(&alg, &g).unwrap();
                        let s: Q = sign(d1 % 2 != 0);
                        rhs.add_scaled(&s, &f.compose(&alg, &tr.boundary(0, 1, &g).unwrap()).unwrap());
                        let mut diff = lhs;
                        diff.add_scaled(&-Q::from_integer(1.into()), &rhs);
                        assert!(diff.pruned().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn identity_is_a_cycle_and_cohomology_is_ext() {
        let t = simples(5, 3);
        let tr = Transfer::new(t.clone(), SplittingMode::Lifted).unwrap();
        for a in 0..5 {
            let mut id = DgElem::zero(0);
            for (k, term) in t.resolutions[a].terms.iter().enumerate() {
                id.comps.insert(k, ProjMap::identity(&t.alg, term));
            }
            assert!(tr.boundary(a, a, &id).unwrap().pruned().is_zero());
            for b in 0..5 {
                for d in -3..=4i64 {
                    let want = if d < 0 { 0 } else { t.dim(a, b, d as usize).unwrap() };
                    assert_eq!(tr.cohomology_dim(a, b, d).unwrap(), want, "block ({a},{b}) degree {d}");
                }
            }
        }
    }

    #[test]
    fn splitting_axioms_hold_in_every_mode() {
        let t = simples(5, 3);
        for mode in [SplittingMode::Lifted, SplittingMode::Echelon] {
            let tr = Transfer::new(t.clone(), mode).unwrap();
            for a in 0..5 {
                for b in 0..5 {
                    for d in -2..=3 {
                        assert!(tr.check_splitting(a, b, d).unwrap(), "{mode:?} ({a},{b}) {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn m2_is_the_yoneda_product() {
        let t = simples(5, 3);
        let tr = Transfer::new(t.clone(), SplittingMode::Echelon).unwrap();
        for tup in tr.tuples(2) {
            let m = tr.m(&tup).unwrap().unwrap();
            let y = t.yoneda(&t.basis_class(tup[0]), &t.basis_class(tup[1])).unwrap();
            assert_eq!(m.coeffs, y.coeffs);
        }
    }

    #[test]
    fn truncated_family_has_higher_product_delta() {
        let t = simples(5, 3);
        let tr = Transfer::new(t.clone(), SplittingMode::Lifted).unwrap();
        for i in 0..2 {
            let tup: Vec<usize> = (0..3).rev().map(|k| t.ids(i + k, i + k + 1, 1)[0]).collect();
            let m = tr.m(&tup).unwrap().unwrap();
            assert_eq!((m.src, m.tgt, m.deg), (i, i + 3, 2));
            assert_eq!(m.coeffs, vec![Q::from_integer(1.into())]);
        }
        assert_eq!(higher_nonzero(&tr, 6).len(), 2);
        assert!(tr.verify_stasheff(6).unwrap().holds);
        assert!(tr.check_internal_degrees(6).unwrap());
    }

    #[test]
    fn koszul_algebra_has_no_higher_products() {
        let tr = Transfer::new(simples(5, 2), SplittingMode::Lifted).unwrap();
        assert!(higher_nonzero(&tr, 5).is_empty());
    }

    #[test]
    fn echelon_splitting_agrees_up_to_scalar() {
        let t = simples(6, 4);
        let lifted = Transfer::new(t.clone(), SplittingMode::Lifted).unwrap();
        let ech = Transfer::new(t.clone(), SplittingMode::Echelon).unwrap();
        for tup in lifted.tuples(4) {
            let x = lifted.m(&tup).unwrap().unwrap();
            let y = ech.m(&tup).unwrap().unwrap();
            assert_eq!(x.coeffs.iter().all(|c| c.is_zero()), y.coeffs.iter().all(|c| c.is_zero()));
        }
        assert!(ech.verify_stasheff(5).unwrap().holds);
    }

    fn compatible(n: usize, ell: usize, an: usize, al: usize) -> Transfer<Q> {
        let de = Arc::new(DualExtension::new(&linear_quiver::<Q>(n, ell), &linear_quiver::<Q>(an, al), None).unwrap());
        let t = Arc::new(ExtTable::build(&de.b, Family::Simples, 10).unwrap());
        let base = Rc::new(Transfer::new(t, SplittingMode::Lifted).unwrap());
        Transfer::compatible(base, de).unwrap()
    }

    #[test]
    fn compatible_splitting_commutes_with_induction() {
        let lt = compatible(4, 3, 4, 0);
        let base = lt.base().unwrap().clone();
        for a in 0..4 {
            for b in 0..4 {
                for d in -1..=2 {
                    assert!(lt.check_splitting(a, b, d).unwrap());
                    for k in 0..base.block_dim(a, b, d) {
                        let f = base.block_unit(a, b, d, k);
                        let ff = lt.induce(&f).unwrap();
                        let lhs = lt.induce(&base.boundary(a, b, &f).unwrap()).unwrap();
                        let rhs = lt.boundary(a, b, &ff).unwrap();
                        assert_eq!(lt.block_coords(a, b, &lhs).unwrap(), lt.block_coords(a, b, &rhs).unwrap());
                        let lhs = lt.induce(&base.apply_h(a, b, &f).unwrap()).unwrap();
                        let rhs = lt.apply_h(a, b, &ff).unwrap();
                        assert_eq!(lt.block_coords(a, b, &lhs).unwrap(), lt.block_coords(a, b, &rhs).unwrap());
                        let pb = base.project(a, b, &f).unwrap();
                        let pl = lt.project(a, b, &ff).unwrap();
                        if d >= 0 {
                            assert!(same_class(&lt.induce_class(&pb).unwrap().coeffs, &pl.coeffs));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn homotopy_kills_radical_homs_after_induced_maps() {
        let lt = compatible(4, 3, 4, 0);
        let base = lt.base().unwrap().clone();
        let de = lt.dual_extension().unwrap().clone();
        for (id, e) in lt.table.elements.iter().enumerate() {
            let f = factor_standard_class(&lt.table, &base.table, &de, id).unwrap();
            if !lt.table.alg.in_radical(&f.gamma) {
                continue;
            }
            let g = hom_chain(&lt.table, f.mid, e.tgt, &f.gamma);
            for a in 0..4 {
                for d in 0..=2 {
                    for k in 0..base.block_dim(a, f.mid, d) {
                        let eps = lt.induce(&base.block_unit(a, f.mid, d, k)).unwrap();
                        let comp = g.compose(&lt.table.alg, &eps).unwrap();
                        assert!(lt.apply_h(a, e.tgt, &comp).unwrap().pruned().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn shortcut_and_embedding_agree_with_direct_transfer() {
        let lt = compatible(5, 3, 5, 3);
        let r = verify_compatibility(&lt, 4).unwrap();
        assert!(r.embedding && r.shortcut, "{:?}", r.mismatches);
        assert!(lt.verify_stasheff(4).unwrap().holds);
    }
}
