//! Finite-dimensional quotients of path algebras as structure-constant tables.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Echelon, PivotRule};
use crate::presentation::{dual_extension, Grading, Path, Presentation, Quiver};
use crate::scalar::Scalar;

/// Safety valve on the number of enumerated paths.
const MAX_ENUMERATED_PATHS: usize = 400_000;

/// A normal path, i.e. one basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub path: Path,
    pub degree: i64,
}

impl BasisElem {
    pub fn src(&self) -> usize {
        self.path.src
    }

    pub fn tgt(&self) -> usize {
        self.path.tgt
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_idempotent(&self) -> bool {
        self.path.is_trivial()
    }
}

/// An algebra element: sparse coordinates over the normal basis.
pub type Elem<F> = SparseVec<F>;

#[derive(Clone, Debug)]
pub struct Algebra<F> {
    pub name: String,
    pub presentation: Presentation<F>,
    pub arrow_degrees: Vec<i64>,
    /// Relations are homogeneous for the chosen grading.
    pub graded: bool,
    basis: Vec<BasisElem>,
    /// `table[i * dim + j] = basis_i · basis_j`.
    table: Vec<Elem<F>>,
    idempotents: Vec<usize>,
    arrow_elems: Vec<Elem<F>>,
    /// `between[t][s]`: basis indices of paths from `s` to `t`, i.e. a basis of `e_t Λ e_s`.
    between: Vec<Vec<Vec<usize>>>,
    from: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl<F: Scalar> Algebra<F> {
    /// Build the quotient `KQ/I` by closing the relations into a two-sided ideal inside
    /// `KQ/rad^M` for growing `M`, stopping once every path of length `M-1` lies in the
    /// ideal. The cap on `M` is `n · (max relation length) · 4`.
    pub fn build(pres: &Presentation<F>) -> Result<Self> {
        pres.validate()?;
        let q = &pres.quiver;
        let degrees = pres.arrow_degrees();
        let max_rel = pres.relations.iter().map(|r| r.max_len()).max().unwrap_or(1).max(1);
        let cap = q.n * max_rel * 4;
        let graded = pres.relations.iter().all(|r| {
            let d: Vec<i64> = r.terms.iter().map(|(_, p)| path_degree(&degrees, p)).collect();
            d.windows(2).all(|w| w[0] == w[1])
        });

        for m in 1..=cap + 1 {
            let layers = enumerate_paths(q, m)?;
            let ideal = IdealData::close(pres, &degrees, &layers, m);
            // When fewer than m layers exist there are no paths of length m-1 at all.
            let complete = layers.len() < m || layers[m - 1].iter().all(|p| ideal.is_in_ideal(p));
            if !complete {
                continue;
            }
            return Ok(Self::from_ideal(pres, degrees, graded, layers, ideal, m));
        }
        Err(Error::NotFiniteDimensional(cap))
    }

    fn from_ideal(
        pres: &Presentation<F>,
        arrow_degrees: Vec<i64>,
        graded: bool,
        layers: Vec<Vec<Path>>,
        ideal: IdealData<F>,
        m: usize,
    ) -> Self {
        let q = &pres.quiver;
        let mut normal: Vec<BasisElem> = layers
            .iter()
            .flatten()
            .filter(|p| !ideal.is_pivot(p))
            .map(|p| BasisElem { path: p.clone(), degree: path_degree(&arrow_degrees, p) })
            .collect();
        normal.sort_by(|a, b| {
            (a.degree, a.len(), &a.path.arrows, a.src()).cmp(&(b.degree, b.len(), &b.path.arrows, b.src()))
        });
        let index: HashMap<Vec<usize>, usize> = normal
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_idempotent())
            .map(|(i, b)| (b.path.arrows.clone(), i))
            .collect();
        let idempotents: Vec<usize> = (0..q.n)
            .map(|v| normal.iter().position(|b| b.is_idempotent() && b.src() == v).expect("idempotent"))
            .collect();
        let mut between = vec![vec![Vec::new(); q.n]; q.n];
        let mut from = vec![Vec::new(); q.n];
        for (i, b) in normal.iter().enumerate() {
            between[b.tgt()][b.src()].push(i);
            from[b.src()].push(i);
        }
        let reduce = |p: &Path| -> Elem<F> {
            if p.len() >= m {
                return Elem::new();
            }
            let v = ideal.reduce_path(p);
            let mut out = Elem::new();
            for (path, c) in v {
                if path.is_trivial() {
                    sparse::add_term(&mut out, idempotents[path.src], c);
                } else {
                    sparse::add_term(&mut out, index[&path.arrows], c);
                }
            }
            out
        };
        let arrow_elems: Vec<Elem<F>> = (0..q.arrows.len()).map(|a| reduce(&Path::arrow(q, a))).collect();
        let dim = normal.len();
        let mut table = vec![Elem::new(); dim * dim];
        for (i, bi) in normal.iter().enumerate() {
            for (j, bj) in normal.iter().enumerate() {
                if bj.tgt() != bi.src() {
                    continue;
                }
                let prod = crate::presentation::compose_paths(&bj.path, &bi.path).expect("composable");
                table[i * dim + j] = if bi.is_idempotent() {
                    sparse::unit(j)
                } else if bj.is_idempotent() {
                    sparse::unit(i)
                } else {
                    reduce(&prod)
                };
            }
        }
        Algebra {
            name: pres.name.clone(),
            presentation: pres.clone(),
            arrow_degrees,
            graded,
            basis: normal,
            table,
            idempotents,
            arrow_elems,
            between,
            from,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.presentation.quiver.n
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn grading(&self) -> &Grading {
        &self.presentation.grading
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn basis_elem(&self, i: usize) -> &BasisElem {
        &self.basis[i]
    }

    /// Internal degree of a basis element under the algebra's grading.
    pub fn internal_degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn arrow_elem(&self, a: usize) -> &Elem<F> {
        &self.arrow_elems[a]
    }

    /// Basis of `e_t Λ e_s`: normal paths from `s` to `t`.
    pub fn between(&self, t: usize, s: usize) -> &[usize] {
        &self.between[t][s]
    }

    /// Basis of `Λ e_s`: normal paths starting at `s`.
    pub fn from(&self, s: usize) -> &[usize] {
        &self.from[s]
    }

    /// Index of a normal path given by its arrows, if it is a basis element.
    pub fn path_index(&self, p: &Path) -> Option<usize> {
        if p.is_trivial() {
            Some(self.idempotents[p.src])
        } else {
            self.index.get(&p.arrows).copied()
        }
    }

    pub fn label(&self, i: usize) -> String {
        self.basis[i].path.display(self.quiver())
    }

    /// `basis_i · basis_j` ("j, then i").
    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem<F> {
        &self.table[i * self.dim() + j]
    }

    /// `x · y` ("y, then x").
    pub fn mul(&self, x: &Elem<F>, y: &Elem<F>) -> Elem<F> {
        let mut out = Elem::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let p = self.mul_basis(i, j);
                if !p.is_empty() {
                    sparse::axpy(&mut out, &(a.clone() * b.clone()), p);
                }
            }
        }
        out
    }

    /// Element represented by an arbitrary path.
    pub fn path_elem(&self, p: &Path) -> Elem<F> {
        let mut cur = sparse::unit(self.idempotents[p.src]);
        for &a in &p.arrows {
            cur = self.mul(&self.arrow_elems[a], &cur);
        }
        cur
    }

    /// Whether the element has no idempotent component (lies in the radical).
    pub fn in_radical(&self, x: &Elem<F>) -> bool {
        x.keys().all(|&i| !self.basis[i].is_idempotent())
    }

    /// Every term of `x` has the given degree.
    pub fn is_homogeneous_of(&self, x: &Elem<F>, d: i64) -> bool {
        x.keys().all(|&i| self.basis[i].degree == d)
    }

    /// Exhaustive associativity check of the structure constants.
    pub fn check_associative(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mul_basis(i, j);
                for k in 0..dim {
                    let left = self.mul(ij, &sparse::unit(k));
                    let right = self.mul(&sparse::unit(i), self.mul_basis(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Counts `dim e_t Λ e_s` for all pairs, as `[t][s]`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        self.between.iter().map(|row| row.iter().map(|v| v.len()).collect()).collect()
    }
}

fn path_degree(degrees: &[i64], p: &Path) -> i64 {
    p.arrows.iter().map(|&a| degrees[a]).sum()
}

/// All paths of length `< m`, grouped by length.
fn enumerate_paths(q: &Quiver, m: usize) -> Result<Vec<Vec<Path>>> {
    let mut layers: Vec<Vec<Path>> = vec![(0..q.n).map(Path::trivial).collect()];
    let mut total = q.n;
    while layers.len() < m {
        let prev = layers.last().expect("nonempty");
        let mut next = Vec::new();
        for p in prev {
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.src == p.tgt {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { src: p.src, tgt: arrow.tgt, arrows });
                }
            }
        }
        total += next.len();
        if total > MAX_ENUMERATED_PATHS {
            return Err(Error::NotFiniteDimensional(m));
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    Ok(layers)
}

/// The image of the ideal in `KQ/rad^M`, kept as one echelon basis per (source, target)
/// block with pivots on the largest path under (degree, length, arrow sequence).
struct IdealData<F> {
    blocks: HashMap<(usize, usize), Block<F>>,
}

struct Block<F> {
    paths: Vec<Path>,
    col: HashMap<Vec<usize>, usize>,
    ech: Echelon<F>,
}

impl<F: Scalar> IdealData<F> {
    fn close(pres: &Presentation<F>, degrees: &[i64], layers: &[Vec<Path>], m: usize) -> Self {
        let q = &pres.quiver;
        let mut grouped: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for p in layers.iter().flatten() {
            grouped.entry((p.src, p.tgt)).or_default().push(p.clone());
        }
        let mut blocks = HashMap::new();
        for (key, mut paths) in grouped {
            paths.sort_by(|a, b| {
                (path_degree(degrees, a), a.len(), &a.arrows).cmp(&(path_degree(degrees, b), b.len(), &b.arrows))
            });
            let col = paths.iter().enumerate().map(|(i, p)| (p.arrows.clone(), i)).collect();
            let ech = Echelon::new(paths.len(), PivotRule::Last);
            blocks.insert(key, Block { paths, col, ech });
        }
        let mut data = IdealData { blocks };

        let mut queue: Vec<((usize, usize), Vec<(Vec<usize>, F)>)> = Vec::new();
        for r in &pres.relations {
            let terms: Vec<(Vec<usize>, F)> =
                r.terms.iter().filter(|(_, p)| p.len() < m).map(|(c, p)| (p.arrows.clone(), c.clone())).collect();
            if !terms.is_empty() {
                queue.push(((r.src(), r.tgt()), terms));
            }
        }
        while let Some((key, terms)) = queue.pop() {
            let Some(block) = data.blocks.get_mut(&key) else { continue };
            let mut v = vec![F::zero(); block.paths.len()];
            for (arrows, c) in &terms {
                let k = block.col[arrows];
                v[k] = v[k].clone() + c.clone();
            }
            if block.ech.insert(v).is_none() {
                continue;
            }
            let row = block.ech.rows().last().expect("inserted").clone();
            let support: Vec<(Vec<usize>, F)> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (block.paths[k].arrows.clone(), c.clone()))
                .collect();
            let (s, t) = key;
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.src == t {
                    let terms: Vec<(Vec<usize>, F)> = support
                        .iter()
                        .filter(|(p, _)| p.len() + 1 < m)
                        .map(|(p, c)| {
                            let mut p = p.clone();
                            p.push(a);
                            (p, c.clone())
                        })
                        .collect();
                    if !terms.is_empty() {
                        queue.push(((s, arrow.tgt), terms));
                    }
                }
                if arrow.tgt == s {
                    let terms: Vec<(Vec<usize>, F)> = support
                        .iter()
                        .filter(|(p, _)| p.len() + 1 < m)
                        .map(|(p, c)| {
                            let mut np = vec![a];
                            np.extend_from_slice(p);
                            (np, c.clone())
                        })
                        .collect();
                    if !terms.is_empty() {
                        queue.push(((arrow.src, t), terms));
                    }
                }
            }
        }
        data
    }

    fn is_pivot(&self, p: &Path) -> bool {
        let block = &self.blocks[&(p.src, p.tgt)];
        block.ech.is_pivot(block.col[&p.arrows])
    }

    fn is_in_ideal(&self, p: &Path) -> bool {
        let block = &self.blocks[&(p.src, p.tgt)];
        let mut v = vec![F::zero(); block.paths.len()];
        v[block.col[&p.arrows]] = F::one();
        block.ech.contains(&v)
    }

    /// Normal form of a path: coefficients on non-pivot paths.
    fn reduce_path(&self, p: &Path) -> Vec<(Path, F)> {
        let block = &self.blocks[&(p.src, p.tgt)];
        let mut v = vec![F::zero(); block.paths.len()];
        v[block.col[&p.arrows]] = F::one();
        block.ech.reduce(&mut v);
        v.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (block.paths[k].clone(), c))
            .collect()
    }
}

/// A dual extension `Λ = 𝒜(B, A^op)` together with its two building blocks and the
/// embeddings of their bases.
#[derive(Clone, Debug)]
pub struct DualExtension<F> {
    pub lambda: Arc<Algebra<F>>,
    pub b: Arc<Algebra<F>>,
    pub a: Arc<Algebra<F>>,
    /// Λ-element of each basis element of B.
    pub b_to_lambda: Vec<Elem<F>>,
    /// Λ-element of the reversed path of each basis element of A.
    pub a_to_lambda: Vec<Elem<F>>,
    /// Λ-arrows coming from A^op.
    pub aop_arrows: Vec<usize>,
    /// Basis elements of Λ that are A^op-paths (idempotents included).
    pub aop_basis: Vec<usize>,
}

impl<F: Scalar> DualExtension<F> {
    /// Build `Λ = 𝒜(B, A^op)` with the given grading on Λ (borel when `None`).
    pub fn new(b: &Presentation<F>, a: &Presentation<F>, grading: Option<Grading>) -> Result<Self> {
        let mut pres = dual_extension(b, a)?;
        let nb = b.quiver.arrows.len();
        let aop_arrows: Vec<usize> = (nb..pres.quiver.arrows.len()).collect();
        if let Some(g) = grading {
            pres.grading = g;
        }
        let lambda = Arc::new(Algebra::build(&pres)?);
        let b_alg = Arc::new(Algebra::build(b)?);
        let a_alg = Arc::new(Algebra::build(a)?);
        let b_to_lambda = b_alg.basis().iter().map(|e| lambda.path_elem(&e.path)).collect();
        let a_to_lambda = a_alg
            .basis()
            .iter()
            .map(|e| {
                let arrows: Vec<usize> = e.path.arrows.iter().rev().map(|&x| x + nb).collect();
                lambda.path_elem(&Path { src: e.path.tgt, tgt: e.path.src, arrows })
            })
            .collect();
        let aop_basis = (0..lambda.dim())
            .filter(|&i| lambda.basis_elem(i).path.arrows.iter().all(|a| aop_arrows.contains(a)))
            .collect();
        Ok(DualExtension { lambda, b: b_alg, a: a_alg, b_to_lambda, a_to_lambda, aop_arrows, aop_basis })
    }

    pub fn is_b_arrow(&self, a: usize) -> bool {
        !self.aop_arrows.contains(&a)
    }

    /// Map a B-element into Λ.
    pub fn embed_b(&self, x: &Elem<F>) -> Elem<F> {
        let mut out = Elem::new();
        for (&i, c) in x {
            sparse::axpy(&mut out, c, &self.b_to_lambda[i]);
        }
        out
    }

    /// A^op-paths of Λ starting at `v`.
    pub fn aop_paths_from(&self, v: usize) -> Vec<usize> {
        self.aop_basis.iter().copied().filter(|&i| self.lambda.basis_elem(i).src() == v).collect()
    }
}
