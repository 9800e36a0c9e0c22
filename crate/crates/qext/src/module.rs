//! Finite-dimensional left modules given as quiver representations.

use std::sync::Arc;

use crate::algebra::{Algebra, DualExtension, Elem};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, PivotRule};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Module<F> {
    pub alg: Arc<Algebra<F>>,
    pub dims: Vec<usize>,
    /// One matrix per arrow, of shape `dims[tgt] × dims[src]`.
    pub actions: Vec<Matrix<F>>,
    /// Internal degree of every basis vector, per vertex.
    pub degrees: Vec<Vec<i64>>,
    pub label: String,
}

/// A module homomorphism: one matrix per vertex, of shape `dim N_v × dim M_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F> {
    pub maps: Vec<Matrix<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Simple,
    Projective,
    Standard,
}

impl<F: Scalar> ModuleMap<F> {
    pub fn zero(src: &Module<F>, tgt: &Module<F>) -> Self {
        ModuleMap { maps: (0..src.dims.len()).map(|v| Matrix::zeros(tgt.dims[v], src.dims[v])).collect() }
    }

    pub fn identity(m: &Module<F>) -> Self {
        ModuleMap { maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap<F>) -> Result<ModuleMap<F>> {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap { maps })
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    /// Intertwines every arrow action.
    pub fn commutes(&self, src: &Module<F>, tgt: &Module<F>) -> bool {
        let q = src.alg.quiver();
        q.arrows.iter().enumerate().all(|(a, arrow)| {
            let left = tgt.actions[a].mul(&self.maps[arrow.src]).expect("shape");
            let right = self.maps[arrow.tgt].mul(&src.actions[a]).expect("shape");
            left == right
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    /// Apply to a vector written in flat coordinates of the source.
    pub fn apply_flat(&self, src: &Module<F>, tgt: &Module<F>, x: &[F]) -> Vec<F> {
        let mut out = Vec::with_capacity(tgt.total_dim());
        for v in 0..src.dims.len() {
            let o = src.offset(v);
            out.extend(self.maps[v].apply(&x[o..o + src.dims[v]]));
        }
        out
    }
}

impl<F: Scalar> Module<F> {
    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        let n = alg.n();
        let q = alg.quiver();
        Module {
            alg: alg.clone(),
            dims: vec![0; n],
            actions: q.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect(),
            degrees: vec![Vec::new(); n],
            label: "0".into(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    /// Vertex of a flat coordinate.
    pub fn vertex_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (v, &d) in self.dims.iter().enumerate() {
            if k < acc + d {
                return v;
            }
            acc += d;
        }
        panic!("coordinate {k} out of range")
    }

    /// Internal degree of a flat coordinate.
    pub fn degree_of(&self, k: usize) -> i64 {
        let v = self.vertex_of(k);
        self.degrees[v][k - self.offset(v)]
    }

    /// Act by a path (given by its arrows in application order) on a vector at its source.
    pub fn act_path(&self, arrows: &[usize], x: &[F]) -> Vec<F> {
        let mut cur = x.to_vec();
        for &a in arrows {
            cur = self.actions[a].apply(&cur);
        }
        cur
    }

    /// Act by an algebra element on a vector in flat coordinates.
    pub fn act_flat(&self, elem: &Elem<F>, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.total_dim()];
        for (&b, c) in elem {
            let be = self.alg.basis_elem(b);
            let (s, t) = (be.src(), be.tgt());
            if self.dims[s] == 0 || self.dims[t] == 0 {
                continue;
            }
            let os = self.offset(s);
            let y = self.act_path(&be.path.arrows, &x[os..os + self.dims[s]]);
            let ot = self.offset(t);
            for (k, yk) in y.into_iter().enumerate() {
                if !yk.is_zero() {
                    out[ot + k] = out[ot + k].clone() + c.clone() * yk;
                }
            }
        }
        out
    }

    /// Act by a basis element on a vector living at its source vertex.
    pub fn act_basis_local(&self, b: usize, x: &[F]) -> Vec<F> {
        self.act_path(&self.alg.basis_elem(b).path.arrows, x)
    }

    /// Every relation acts by zero and all shapes match.
    pub fn check(&self) -> bool {
        let q = self.alg.quiver();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let m = &self.actions[a];
            if self.dims[arrow.src] > 0 && self.dims[arrow.tgt] > 0 {
                if m.rows() != self.dims[arrow.tgt] || m.cols() != self.dims[arrow.src] {
                    return false;
                }
            }
        }
        for r in &self.alg.presentation.relations {
            let (s, t) = (r.src(), r.tgt());
            for k in 0..self.dims[s] {
                let mut e = vec![F::zero(); self.dims[s]];
                e[k] = F::one();
                let mut acc = vec![F::zero(); self.dims[t]];
                for (c, p) in &r.terms {
                    let y = self.act_path(&p.arrows, &e);
                    for (o, yi) in acc.iter_mut().zip(y) {
                        *o = o.clone() + c.clone() * yi;
                    }
                }
                if acc.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn simple(alg: &Arc<Algebra<F>>, i: usize) -> Result<Self> {
        check_vertex(alg, i)?;
        let mut m = Module::zero(alg);
        m.dims[i] = 1;
        m.degrees[i] = vec![0];
        m.fix_shapes();
        m.label = format!("L({})", i + 1);
        Ok(m)
    }

    /// `Λe_i`, with basis the normal paths starting at `i`.
    pub fn projective(alg: &Arc<Algebra<F>>, i: usize) -> Result<Self> {
        check_vertex(alg, i)?;
        let n = alg.n();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| alg.between(v, i).to_vec()).collect();
        let dims: Vec<usize> = coords.iter().map(|c| c.len()).collect();
        let q = alg.quiver();
        let mut actions = Vec::new();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (s, t) = (arrow.src, arrow.tgt);
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (c, &b) in coords[s].iter().enumerate() {
                let prod = alg.mul(alg.arrow_elem(a), &crate::linalg::sparse::unit(b));
                for (&k, val) in &prod {
                    let r = coords[t].iter().position(|&x| x == k).expect("product stays in the projective");
                    m[(r, c)] = val.clone();
                }
            }
            actions.push(m);
        }
        let degrees = coords.iter().map(|c| c.iter().map(|&b| alg.internal_degree(b)).collect()).collect();
        Ok(Module { alg: alg.clone(), dims, actions, degrees, label: format!("P({})", i + 1) })
    }

    /// `P(i)` modulo the images of all homomorphisms `P(j) → P(i)` with `j > i`.
    pub fn standard(alg: &Arc<Algebra<F>>, i: usize) -> Result<Self> {
        let p = Module::projective(alg, i)?;
        let mut gens: Vec<Vec<F>> = Vec::new();
        for j in i + 1..alg.n() {
            let pj = Module::projective(alg, j)?;
            for f in hom_space(&pj, &p)? {
                for k in 0..pj.total_dim() {
                    let mut e = vec![F::zero(); pj.total_dim()];
                    e[k] = F::one();
                    gens.push(f.apply_flat(&pj, &p, &e));
                }
            }
        }
        let sub = p.submodule_generated(&gens);
        let (mut q, _) = p.quotient(&sub)?;
        q.label = format!("Δ({})", i + 1);
        Ok(q)
    }

    pub fn canonical(alg: &Arc<Algebra<F>>, kind: ModuleKind, i: usize) -> Result<Self> {
        match kind {
            ModuleKind::Simple => Module::simple(alg, i),
            ModuleKind::Projective => Module::projective(alg, i),
            ModuleKind::Standard => Module::standard(alg, i),
        }
    }

    fn fix_shapes(&mut self) {
        let q = self.alg.quiver().clone();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let m = &self.actions[a];
            if m.rows() != self.dims[arrow.tgt] || m.cols() != self.dims[arrow.src] {
                self.actions[a] = Matrix::zeros(self.dims[arrow.tgt], self.dims[arrow.src]);
            }
        }
    }

    /// Smallest submodule containing the given flat vectors, as per-vertex echelon bases.
    pub fn submodule_generated(&self, gens: &[Vec<F>]) -> Vec<Echelon<F>> {
        let n = self.dims.len();
        let mut ech: Vec<Echelon<F>> = self.dims.iter().map(|&d| Echelon::new(d, PivotRule::First)).collect();
        let mut queue: Vec<(usize, Vec<F>)> = Vec::new();
        for g in gens {
            for v in 0..n {
                let o = self.offset(v);
                let part = g[o..o + self.dims[v]].to_vec();
                if part.iter().any(|x| !x.is_zero()) {
                    queue.push((v, part));
                }
            }
        }
        let q = self.alg.quiver();
        while let Some((v, x)) = queue.pop() {
            if ech[v].insert(x).is_none() {
                continue;
            }
            let row = ech[v].rows().last().expect("inserted").clone();
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.src == v && self.dims[arrow.tgt] > 0 {
                    let y = self.actions[a].apply(&row);
                    if y.iter().any(|x| !x.is_zero()) {
                        queue.push((arrow.tgt, y));
                    }
                }
            }
        }
        ech
    }

    /// Quotient by a submodule given per vertex. The quotient basis is the set of standard
    /// coordinates at non-pivot positions; the projection reduces modulo the submodule.
    pub fn quotient(&self, sub: &[Echelon<F>]) -> Result<(Module<F>, ModuleMap<F>)> {
        let n = self.dims.len();
        let keep: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let red = sub[v].reduced_rows();
                let piv: Vec<usize> = red.iter().map(|(p, _)| *p).collect();
                (0..self.dims[v]).filter(|c| !piv.contains(c)).collect()
            })
            .collect();
        let project = |v: usize, x: &[F]| -> Vec<F> {
            let mut y = x.to_vec();
            reduce_fully(&sub[v], &mut y);
            keep[v].iter().map(|&c| y[c].clone()).collect()
        };
        let dims: Vec<usize> = keep.iter().map(|k| k.len()).collect();
        let q = self.alg.quiver();
        let mut actions = Vec::new();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (s, t) = (arrow.src, arrow.tgt);
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (c, &k) in keep[s].iter().enumerate() {
                let mut e = vec![F::zero(); self.dims[s]];
                e[k] = F::one();
                let y = if self.dims[t] > 0 { self.actions[a].apply(&e) } else { Vec::new() };
                for (r, val) in project(t, &y).into_iter().enumerate() {
                    m[(r, c)] = val;
                }
            }
            actions.push(m);
        }
        let maps = (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(dims[v], self.dims[v]);
                for c in 0..self.dims[v] {
                    let mut e = vec![F::zero(); self.dims[v]];
                    e[c] = F::one();
                    for (r, val) in project(v, &e).into_iter().enumerate() {
                        m[(r, c)] = val;
                    }
                }
                m
            })
            .collect();
        let degrees = (0..n).map(|v| keep[v].iter().map(|&c| self.degrees[v][c]).collect()).collect();
        let quotient = Module { alg: self.alg.clone(), dims, actions, degrees, label: format!("{}/U", self.label) };
        Ok((quotient, ModuleMap { maps }))
    }

    /// The submodule spanned by the given per-vertex bases, with its inclusion.
    pub fn submodule(&self, sub: &[Echelon<F>]) -> Result<(Module<F>, ModuleMap<F>)> {
        let n = self.dims.len();
        let bases: Vec<Vec<Vec<F>>> = (0..n).map(|v| sub[v].reduced_rows().into_iter().map(|(_, r)| r).collect()).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let q = self.alg.quiver();
        let mut actions = Vec::new();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (s, t) = (arrow.src, arrow.tgt);
            let mut m = Matrix::zeros(dims[t], dims[s]);
            if dims[s] > 0 && dims[t] > 0 {
                let target = Matrix::from_rows(self.dims[t], bases[t].clone()).transpose();
                for (c, x) in bases[s].iter().enumerate() {
                    let y = self.actions[a].apply(x);
                    let coeffs = target
                        .solve(&y)?
                        .ok_or_else(|| Error::Internal("subspace is not a submodule".into()))?;
                    for (r, val) in coeffs.into_iter().enumerate() {
                        m[(r, c)] = val;
                    }
                }
            }
            actions.push(m);
        }
        let maps = (0..n).map(|v| Matrix::from_rows(self.dims[v], bases[v].clone()).transpose()).collect();
        let degrees = (0..n)
            .map(|v| {
                bases[v]
                    .iter()
                    .map(|x| {
                        let k = x.iter().position(|c| !c.is_zero()).expect("nonzero");
                        self.degrees[v][k]
                    })
                    .collect()
            })
            .collect();
        let module = Module { alg: self.alg.clone(), dims, actions, degrees, label: format!("sub {}", self.label) };
        Ok((module, ModuleMap { maps }))
    }

    /// Direct sum, with basis the concatenation per vertex.
    pub fn direct_sum(alg: &Arc<Algebra<F>>, parts: &[Module<F>]) -> Module<F> {
        let n = alg.n();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let q = alg.quiver();
        let mut actions = Vec::new();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let mut m = Matrix::zeros(dims[arrow.tgt], dims[arrow.src]);
            let (mut ro, mut co) = (0, 0);
            for p in parts {
                let pm = &p.actions[a];
                for r in 0..p.dims[arrow.tgt] {
                    for c in 0..p.dims[arrow.src] {
                        m[(ro + r, co + c)] = pm[(r, c)].clone();
                    }
                }
                ro += p.dims[arrow.tgt];
                co += p.dims[arrow.src];
            }
            actions.push(m);
        }
        let degrees = (0..n).map(|v| parts.iter().flat_map(|p| p.degrees[v].clone()).collect()).collect();
        let label = parts.iter().map(|p| p.label.clone()).collect::<Vec<_>>().join(" ⊕ ");
        Module { alg: alg.clone(), dims, actions, degrees, label }
    }

    /// Per-vertex radical `Σ im(arrow actions)`.
    pub fn radical_spaces(&self) -> Vec<Echelon<F>> {
        let n = self.dims.len();
        let mut ech: Vec<Echelon<F>> = self.dims.iter().map(|&d| Echelon::new(d, PivotRule::First)).collect();
        let q = self.alg.quiver();
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (s, t) = (arrow.src, arrow.tgt);
            if self.dims[s] == 0 || self.dims[t] == 0 {
                continue;
            }
            for c in 0..self.dims[s] {
                ech[t].insert(self.actions[a].column(c));
            }
        }
        debug_assert_eq!(ech.len(), n);
        ech
    }

    /// Dimension vectors of the radical layers `rad^k M / rad^{k+1} M`.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let rad = cur.radical_spaces();
            let top: Vec<usize> = (0..cur.dims.len()).map(|v| cur.dims[v] - rad[v].len()).collect();
            layers.push(top);
            let (sub, _) = cur.submodule(&rad).expect("radical is a submodule");
            cur = sub;
        }
        layers
    }

    pub fn same_algebra(&self, other: &Module<F>) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.presentation == other.alg.presentation
    }
}

fn check_vertex<F: Scalar>(alg: &Algebra<F>, i: usize) -> Result<()> {
    if i >= alg.n() {
        return Err(Error::InvalidReference(format!("vertex {} outside 1..{}", i + 1, alg.n())));
    }
    Ok(())
}

fn reduce_fully<F: Scalar>(ech: &Echelon<F>, x: &mut [F]) {
    ech.reduce(x);
}

/// Radical, top and the projection onto the top.
#[derive(Clone, Debug)]
pub struct RadicalTop<F> {
    pub radical: Module<F>,
    pub inclusion: ModuleMap<F>,
    pub top: Module<F>,
    pub projection: ModuleMap<F>,
}

pub fn radical_top<F: Scalar>(m: &Module<F>) -> Result<RadicalTop<F>> {
    let rad = m.radical_spaces();
    let (radical, inclusion) = m.submodule(&rad)?;
    let (top, projection) = m.quotient(&rad)?;
    Ok(RadicalTop { radical, inclusion, top, projection })
}

/// Basis of `Hom(M, N)`, from the kernel of the intertwining system.
pub fn hom_space<F: Scalar>(m: &Module<F>, n: &Module<F>) -> Result<Vec<ModuleMap<F>>> {
    if !m.same_algebra(n) {
        return Err(Error::Precondition("modules over different algebras".into()));
    }
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<F>> = Vec::new();
    let q = m.alg.quiver();
    for (a, arrow) in q.arrows.iter().enumerate() {
        let (s, t) = (arrow.src, arrow.tgt);
        // N_a X_s - X_t M_a = 0, entry (r, c) with r < dim N_t, c < dim M_s.
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..n.dims[s] {
                    let coef = n.actions[a][(r, k)].clone();
                    if !coef.is_zero() {
                        let i = var(s, k, c);
                        row[i] = row[i].clone() + coef;
                    }
                }
                for k in 0..m.dims[t] {
                    let coef = m.actions[a][(k, c)].clone();
                    if !coef.is_zero() {
                        let i = var(t, r, k);
                        row[i] = row[i].clone() - coef;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(unknowns)
    } else {
        Matrix::from_rows(unknowns, rows).kernel()
    };
    let mut basis = Vec::new();
    for k in 0..kernel.rows() {
        let x = kernel.row(k);
        let maps = (0..nv)
            .map(|v| {
                let mut mat = Matrix::zeros(n.dims[v], m.dims[v]);
                for r in 0..n.dims[v] {
                    for c in 0..m.dims[v] {
                        mat[(r, c)] = x[var(v, r, c)].clone();
                    }
                }
                mat
            })
            .collect();
        basis.push(ModuleMap { maps });
    }
    Ok(basis)
}

/// Projective cover `P → M`: one summand `P(v)` per top generator of `M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F> {
    pub cover: Module<F>,
    pub epi: ModuleMap<F>,
    /// Generators `(vertex, flat vector in M)` in summand order.
    pub generators: Vec<(usize, Vec<F>)>,
}

/// Top generators of `M`: standard coordinates outside the radical, per vertex.
pub fn top_generators<F: Scalar>(m: &Module<F>) -> Vec<(usize, Vec<F>)> {
    let rad = m.radical_spaces();
    let mut gens = Vec::new();
    for v in 0..m.dims.len() {
        let piv: Vec<usize> = rad[v].reduced_rows().iter().map(|(p, _)| *p).collect();
        for c in 0..m.dims[v] {
            if !piv.contains(&c) {
                let mut x = vec![F::zero(); m.total_dim()];
                x[m.offset(v) + c] = F::one();
                gens.push((v, x));
            }
        }
    }
    gens
}

pub fn projective_cover<F: Scalar>(m: &Module<F>) -> Result<ProjectiveCover<F>> {
    let gens = top_generators(m);
    let alg = &m.alg;
    let parts = gens.iter().map(|(v, _)| Module::projective(alg, *v)).collect::<Result<Vec<_>>>()?;
    let cover = Module::direct_sum(alg, &parts);
    let n = alg.n();
    let mut maps: Vec<Matrix<F>> = (0..n).map(|v| Matrix::zeros(m.dims[v], cover.dims[v])).collect();
    let mut col_offsets = vec![0usize; n];
    for (g, (gv, x)) in gens.iter().enumerate() {
        let local = &x[m.offset(*gv)..m.offset(*gv) + m.dims[*gv]];
        for v in 0..n {
            for (c, &b) in alg.between(v, *gv).iter().enumerate() {
                let y = m.act_basis_local(b, local);
                for (r, val) in y.into_iter().enumerate() {
                    maps[v][(r, col_offsets[v] + c)] = val;
                }
            }
            col_offsets[v] += parts[g].dims[v];
        }
    }
    Ok(ProjectiveCover { cover, epi: ModuleMap { maps }, generators: gens })
}

/// Search for an isomorphism among generic combinations of a basis of `Hom(M, N)`.
pub fn find_isomorphism<F: Scalar>(m: &Module<F>, n: &Module<F>) -> Result<Option<ModuleMap<F>>> {
    if m.dims != n.dims {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok((m.total_dim() == 0).then(|| ModuleMap::zero(m, n)));
    }
    for f in &basis {
        if f.is_invertible() {
            return Ok(Some(f.clone()));
        }
    }
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..24 {
        let mut combo = ModuleMap::zero(m, n);
        for f in &basis {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = F::from_i64(((state >> 33) % 89) as i64 + 1);
            for (acc, x) in combo.maps.iter_mut().zip(&f.maps) {
                for r in 0..acc.rows() {
                    for col in 0..acc.cols() {
                        acc[(r, col)] = acc[(r, col)].clone() + c.clone() * x[(r, col)].clone();
                    }
                }
            }
        }
        if combo.is_invertible() {
            return Ok(Some(combo));
        }
    }
    Ok(None)
}

pub fn is_isomorphic<F: Scalar>(m: &Module<F>, n: &Module<F>) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// `F(M) = Λ ⊗_B M`. Basis: pairs `(q′, m)` with `q′` a normal A^op-path starting at the
/// vertex of `m`; it sits at the target of `q′`.
pub fn induce_f<F: Scalar>(de: &DualExtension<F>, m: &Module<F>) -> Result<Module<F>> {
    Ok(induce_f_with_basis(de, m)?.0)
}

/// As [`induce_f`], also returning the basis labels `(q′ index in Λ, source vertex, index in M_v)`
/// listed per target vertex.
pub fn induce_f_with_basis<F: Scalar>(
    de: &DualExtension<F>,
    m: &Module<F>,
) -> Result<(Module<F>, Vec<Vec<(usize, usize, usize)>>)> {
    if m.alg.presentation != de.b.presentation {
        return Err(Error::Precondition("module is not over the Borel subalgebra".into()));
    }
    let lam = &de.lambda;
    let n = lam.n();
    let mut coords: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for v in 0..n {
        for q in de.aop_paths_from(v) {
            let t = lam.basis_elem(q).tgt();
            for k in 0..m.dims[v] {
                coords[t].push((q, v, k));
            }
        }
    }
    let dims: Vec<usize> = coords.iter().map(|c| c.len()).collect();
    let find = |t: usize, key: (usize, usize, usize)| coords[t].iter().position(|&c| c == key).expect("basis label");
    let quiver = lam.quiver();
    let mut actions = Vec::new();
    for (a, arrow) in quiver.arrows.iter().enumerate() {
        let (s, t) = (arrow.src, arrow.tgt);
        let mut mat = Matrix::zeros(dims[t], dims[s]);
        for (c, &(q, v, k)) in coords[s].iter().enumerate() {
            if de.is_b_arrow(a) {
                if !lam.basis_elem(q).is_idempotent() {
                    continue;
                }
                let mut e = vec![F::zero(); m.dims[v]];
                e[k] = F::one();
                let y = m.actions[a].apply(&e);
                for (r, val) in y.into_iter().enumerate() {
                    if !val.is_zero() {
                        mat[(find(t, (lam.idempotent(t), t, r)), c)] = val;
                    }
                }
            } else {
                let prod = lam.mul(lam.arrow_elem(a), &crate::linalg::sparse::unit(q));
                for (&q2, val) in &prod {
                    mat[(find(t, (q2, v, k)), c)] = val.clone();
                }
            }
        }
        actions.push(mat);
    }
    let degrees = (0..n)
        .map(|t| coords[t].iter().map(|&(q, v, k)| lam.internal_degree(q) + m.degrees[v][k]).collect())
        .collect();
    let module = Module { alg: lam.clone(), dims, actions, degrees, label: format!("F({})", m.label) };
    Ok((module, coords))
}

/// `B ⊗_Λ N`: the quotient of `N` by everything reached through an A^op-arrow, as a B-module.
pub fn restrict_to_borel<F: Scalar>(de: &DualExtension<F>, n: &Module<F>) -> Result<Module<F>> {
    let mut gens = Vec::new();
    let quiver = de.lambda.quiver();
    for &a in &de.aop_arrows {
        let s = quiver.arrows[a].src;
        for c in 0..n.dims[s] {
            let mut x = vec![F::zero(); n.total_dim()];
            x[n.offset(s) + c] = F::one();
            gens.push(n.act_flat(de.lambda.arrow_elem(a), &x));
        }
    }
    let sub = n.submodule_generated(&gens);
    let (q, _) = n.quotient(&sub)?;
    let nb = de.b.quiver().arrows.len();
    Ok(Module {
        alg: de.b.clone(),
        dims: q.dims.clone(),
        actions: q.actions[..nb].to_vec(),
        degrees: q.degrees.clone(),
        label: format!("G({})", n.label),
    })
}
