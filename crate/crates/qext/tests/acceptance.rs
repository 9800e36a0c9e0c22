//! Acceptance criteria. Every test prints one `PASS`/`FAIL` line with its measured time and
//! pinned time budget; all comparisons are exact.

use std::rc::Rc;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qext::algebra::{Algebra, DualExtension};
use qext::boxes::compute_box;
use qext::ext::{ext_dim_formula, verify_dualext_iso, ExtClass, ExtTable, Family};
use qext::family::{build_family, label_class_b, label_class_lambda, oracle_ext, oracle_ext_presentation, oracle_m, oracle_m_sign, FamilyParams, OracleLabel};
use qext::linalg::Matrix;
use qext::module::{hom_space, Module};
use qext::presentation::{linear_quiver, Path, Presentation, Quiver, Relation};
use qext::resolution::{koszul_report, Resolution};
use qext::transfer::{verify_compatibility, SplittingMode, Transfer};
use qext::Rational;

type Q = Rational;

/// Print the verdict line and fail the test on a failed check or a blown budget.
fn report(id: usize, name: &str, budget_s: u64, start: Instant, failures: Vec<String>) {
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_s);
    let mut failures = failures;
    if elapsed > budget {
        failures.push(format!("took {:.2}s, budget {budget_s}s", elapsed.as_secs_f64()));
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {id:>2} {name} [{:.3}s / {budget_s}s, exact]", elapsed.as_secs_f64());
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn fam(n: usize, ell: usize) -> FamilyParams {
    FamilyParams::new(n, ell).unwrap()
}

fn family_table(p: FamilyParams, cutoff: usize) -> Arc<ExtTable<Q>> {
    let alg = Arc::new(Algebra::build(&build_family::<Q>(p).unwrap()).unwrap());
    Arc::new(ExtTable::build(&alg, Family::Simples, cutoff).unwrap())
}

fn compatible(b: &Presentation<Q>, a: &Presentation<Q>, cutoff: usize) -> (Arc<DualExtension<Q>>, Transfer<Q>) {
    let de = Arc::new(DualExtension::new(b, a, None).unwrap());
    let table = Arc::new(ExtTable::build(&de.b, Family::Simples, cutoff).unwrap());
    let base = Rc::new(Transfer::new(table, SplittingMode::Lifted).unwrap());
    let lt = Transfer::compatible(base, de.clone()).unwrap();
    (de, lt)
}

fn is_zero(x: &ExtClass<Q>) -> bool {
    x.coeffs.iter().all(Zero::is_zero)
}

/// `got = c · want` for some nonzero `c`, returned.
fn proportional(got: &ExtClass<Q>, want: &ExtClass<Q>) -> Option<Q> {
    if (got.src, got.tgt, got.deg) != (want.src, want.tgt, want.deg) || is_zero(want) {
        return None;
    }
    let k = want.coeffs.iter().position(|c| !c.is_zero())?;
    let c = got.coeffs.get(k).cloned().unwrap_or_else(Q::zero) / want.coeffs[k].clone();
    if c.is_zero() {
        return None;
    }
    let pad = |v: &[Q], i: usize| v.get(i).cloned().unwrap_or_else(Q::zero);
    let len = got.coeffs.len().max(want.coeffs.len());
    (0..len).all(|i| pad(&got.coeffs, i) == c.clone() * pad(&want.coeffs, i)).then_some(c)
}

/// Basis id whose class is `x`, if `x` is a basis element.
fn basis_id(table: &ExtTable<Q>, x: &ExtClass<Q>) -> Option<usize> {
    table.ids(x.src, x.tgt, x.deg).iter().copied().find(|&id| proportional(x, &table.basis_class(id)) == Some(Q::one()))
}

fn label_of(table: &ExtTable<Q>, id: usize) -> OracleLabel {
    let e = &table.elements[id];
    OracleLabel::word(e.src, e.deg % 2, e.deg / 2)
}

#[test]
fn criterion_01_ext_dimensions_of_the_family() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for (n, ell) in [(5, 3), (6, 3), (7, 3), (6, 4), (8, 4)] {
        let p = fam(n, ell);
        let top = 2 * (n / ell) + 2;
        let table = family_table(p, top + 1);
        for i in 0..n {
            for j in 0..n {
                for k in 0..=top {
                    cases += 1;
                    let got = table.dim(i, j, k);
                    let want = oracle_ext(p, i, j, k);
                    check(&mut failures, got == Some(want), || format!("({n},{ell}) Ext^{k}(L{}, L{}): {got:?} vs {want}", i + 1, j + 1));
                }
            }
        }
    }
    check(&mut failures, cases > 1000, || format!("only {cases} cases"));
    report(1, "Ext dimensions match the closed form", 10, start, failures);
}

#[test]
fn criterion_02_ext_algebra_presentation() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = fam(5, 3);
    let (n, ell) = (5, 3);
    let table = family_table(p, 8);
    let oracle = Algebra::build(&oracle_ext_presentation::<Q>(p).unwrap()).unwrap();
    for i in 0..n {
        for j in 0..n {
            for k in 0..=6 {
                let paths = oracle.between(j, i).iter().filter(|&&b| oracle.internal_degree(b) == k as i64).count();
                let dim = table.dim(i, j, k).unwrap_or(0);
                check(&mut failures, paths == dim, || format!("degree {k}, {} → {}: {paths} paths vs dim {dim}", i + 1, j + 1));
            }
        }
    }
    let gen = |i: usize, j: usize, k: usize| {
        let ids = table.ids(i, j, k);
        assert_eq!(ids.len(), 1, "Ext^{k}(L{}, L{})", i + 1, j + 1);
        table.basis_class(ids[0])
    };
    let eps = |i: usize| gen(i, i + 1, 1);
    let delta = |i: usize| gen(i, i + ell, 2);
    // ε_{i+1} ε_i = 0.
    for i in 0..n - 2 {
        let x = table.yoneda(&eps(i + 1), &eps(i)).unwrap();
        check(&mut failures, is_zero(&x), || format!("ε{} ε{} ≠ 0", i + 2, i + 1));
    }
    // ε_{i+ℓ} δ_i = δ_{i+1} ε_i ≠ 0.
    for i in 0..n - ell - 1 {
        let l = table.yoneda(&eps(i + ell), &delta(i)).unwrap();
        let r = table.yoneda(&delta(i + 1), &eps(i)).unwrap();
        check(&mut failures, !is_zero(&l) && proportional(&l, &r) == Some(Q::one()), || {
            format!("ε{} δ{} = {:?}, δ{} ε{} = {:?}", i + ell + 1, i + 1, l.coeffs, i + 2, i + 1, r.coeffs)
        });
    }
    report(2, "Ext-algebra presentation and its relations", 10, start, failures);
}

#[test]
fn criterion_03_higher_product_vanishing_pattern() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = fam(5, 3);
    let table = family_table(p, 8);
    for id in 0..table.elements.len() {
        let x = label_class_b(&table, p, &label_of(&table, id)).unwrap();
        check(&mut failures, proportional(&x, &table.basis_class(id)) == Some(Q::one()), || format!("label of {}", table.elements[id].label));
    }
    let mut predicted = 0;
    for mode in [SplittingMode::Lifted, SplittingMode::Echelon] {
        let tr = Transfer::new(table.clone(), mode).unwrap();
        for k in 4..=6 {
            for t in tr.tuples(k) {
                match tr.m(&t).unwrap() {
                    Some(x) => check(&mut failures, is_zero(&x), || format!("{mode:?} m{k} ≠ 0 on {t:?}")),
                    None => failures.push(format!("{mode:?} m{k} invalid on {t:?}")),
                }
            }
        }
        for t in tr.tuples(3) {
            let got = tr.m(&t).unwrap().expect("complete resolutions");
            let labels: Vec<OracleLabel> = t.iter().map(|&x| label_of(&table, x)).collect();
            let want = oracle_m(p, &labels).unwrap();
            match want {
                None => check(&mut failures, is_zero(&got), || format!("{mode:?} m3{t:?} should vanish")),
                Some(l) => {
                    predicted += 1;
                    let w = label_class_b(&table, p, &l).unwrap();
                    let c = proportional(&got, &w);
                    let sign = Q::from_integer(oracle_m_sign(p, 3).into());
                    let ok = match mode {
                        SplittingMode::Lifted => c == Some(sign),
                        _ => c.is_some(),
                    };
                    check(&mut failures, ok, || format!("{mode:?} m3{t:?}: {:?} vs β-class {:?}", got.coeffs, w.coeffs));
                }
            }
        }
    }
    check(&mut failures, predicted == 4, || format!("{predicted} predicted nonzero m3 values, expected 2 per splitting"));
    report(3, "m4..m6 vanish and m3(α,α,α) is the β-class", 60, start, failures);
}

fn dual_extension_cases() -> Vec<(Presentation<Q>, Presentation<Q>)> {
    vec![
        (linear_quiver(4, 3), linear_quiver(4, 0)),
        (linear_quiver(2, 0), linear_quiver(2, 0)),
        (linear_quiver(5, 3), linear_quiver(5, 3)),
    ]
}

#[test]
fn criterion_04_dual_extension_isomorphism() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (b, a) in dual_extension_cases() {
        let de = DualExtension::new(&b, &a, None).unwrap();
        let r = verify_dualext_iso(&de, 6).unwrap();
        check(&mut failures, r.dims_equal && r.bijective && r.multiplicative && r.isomorphic, || {
            format!("{}: {:?}", de.lambda.name, r.mismatches)
        });
    }
    report(4, "Ext_Λ(Δ,Δ) ≅ 𝒜(Ext_B(𝕃,𝕃), A)", 60, start, failures);
}

#[test]
fn criterion_05_standard_ext_dimension_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for (b, a) in dual_extension_cases() {
        let de = DualExtension::new(&b, &a, None).unwrap();
        for i in 0..de.b.n() {
            let res_b = Resolution::minimal(&Module::simple(&de.b, i).unwrap(), 8).unwrap();
            let res_d = Resolution::minimal(&Module::standard(&de.lambda, i).unwrap(), 8).unwrap();
            check(&mut failures, res_b.complete && res_d.complete, || format!("{}: resolution {i} incomplete", de.lambda.name));
            for j in 0..de.b.n() {
                for k in 0..res_b.terms.len().max(res_d.terms.len()) {
                    cases += 1;
                    let (l, r) = ext_dim_formula(&de, &res_b, &res_d, j, k).unwrap();
                    check(&mut failures, l == r, || format!("{} Ext^{k}(Δ{}, Δ{}): {l} vs {r}", de.lambda.name, i + 1, j + 1));
                }
            }
        }
    }
    check(&mut failures, cases >= 30, || format!("only {cases} cases"));
    report(5, "dim Ext^k(Δi,Δj) = Σ m_{l,k} dim e_j A e_l", 30, start, failures);
}

#[test]
fn criterion_06_compatibility_and_shortcut() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = fam(5, 3);
    let b = build_family::<Q>(p).unwrap();
    let (_, lt) = compatible(&b, &b, 8);
    let r = verify_compatibility(&lt, 5).unwrap();
    check(&mut failures, r.embedding, || format!("embedding: {:?}", r.mismatches));
    check(&mut failures, r.shortcut, || format!("shortcut: {:?}", r.mismatches));
    check(&mut failures, r.checked > 100, || format!("only {} tuples", r.checked));

    // A radical Hom in a middle position kills the product.
    let (mut radical_middle, mut n3) = (0, 0);
    for t in lt.tuples(3) {
        let labels: Vec<String> = t.iter().map(|&x| lt.table.elements[x].label.clone()).collect();
        let Some(got) = lt.m(&t).unwrap() else { continue };
        n3 += 1;
        let middle = lt.table.elements[t[1]].deg == 0 && !lt.is_unit_element(t[1]);
        if middle {
            radical_middle += 1;
            check(&mut failures, is_zero(&got), || format!("radical middle {labels:?} gives nonzero"));
        }
    }
    check(&mut failures, radical_middle > 0 && n3 > 0, || "no radical-middle tuples exercised".into());

    // m₃(g′α, α, α) = g′β.
    let g_alpha = OracleLabel { start: 2, x: 1, y: 0, hom_to: Some(4) };
    let ins = [g_alpha, OracleLabel::word(1, 1, 0), OracleLabel::word(0, 1, 0)];
    let want = oracle_m(p, &ins).unwrap().expect("nonzero");
    check(&mut failures, want == OracleLabel { start: 0, x: 0, y: 1, hom_to: Some(4) }, || format!("oracle gave {want:?}"));
    let ids: Option<Vec<usize>> = ins.iter().map(|l| basis_id(&lt.table, &label_class_lambda(&lt, p, l).unwrap())).collect();
    match ids {
        Some(ids) => {
            let got = lt.m(&ids).unwrap().expect("valid");
            let w = label_class_lambda(&lt, p, &want).unwrap();
            check(&mut failures, !is_zero(&w) && proportional(&got, &w) == Some(Q::one()), || format!("m3(g′α,α,α) = {:?}, g′β = {:?}", got.coeffs, w.coeffs));
        }
        None => failures.push("inputs are not basis elements".into()),
    }
    report(6, "compatible splitting, shortcut, m3(g′α,α,α) = g′β", 120, start, failures);
}

#[test]
fn criterion_07_stasheff_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = fam(5, 3);
    let tr = Transfer::new(family_table(p, 8), SplittingMode::Lifted).unwrap();
    let s = tr.verify_stasheff(5).unwrap();
    check(&mut failures, s.holds && s.checked > 0, || format!("Ext_B: {:?}", s.violations));
    let b = build_family::<Q>(p).unwrap();
    let (_, lt) = compatible(&b, &b, 8);
    let s = lt.verify_stasheff(5).unwrap();
    check(&mut failures, s.holds && s.checked > 0 && s.skipped == 0, || format!("Ext_Λ: {:?}, skipped {}", s.violations, s.skipped));
    report(7, "Stasheff identities up to arity 5 on Ext_B and Ext_Λ", 120, start, failures);
}

fn all_higher_vanish(tr: &Transfer<Q>, max: usize) -> Result<(), String> {
    for k in 3..=max {
        for t in tr.tuples(k) {
            match tr.m(&t).map_err(|e| e.to_string())? {
                Some(x) if is_zero(&x) => {}
                other => return Err(format!("m{k}{t:?} = {other:?}")),
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_08_koszulity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in [3, 4, 5] {
        let b = linear_quiver::<Q>(n, 2);
        let alg = Arc::new(Algebra::build(&b).unwrap());
        let r = koszul_report(&alg, 8, None, false).unwrap();
        check(&mut failures, r.koszul, || format!("KA{n}/rad2 not Koszul: {:?}", r.nonlinear));
        let tr = Transfer::new(Arc::new(ExtTable::build(&alg, Family::Simples, 8).unwrap()), SplittingMode::Lifted).unwrap();
        if let Err(e) = all_higher_vanish(&tr, 5) {
            failures.push(format!("KA{n}/rad2: {e}"));
        }
    }
    let b = linear_quiver::<Q>(4, 2);
    let (_, lt) = compatible(&b, &b, 8);
    // Koszulity refers to the path-length grading of Λ.
    let path_length = Some(qext::presentation::Grading::PathLength);
    let graded = DualExtension::new(&b, &b, path_length.clone()).unwrap();
    let opposite = DualExtension::new(&b, &b, path_length).unwrap();
    let r = koszul_report(&graded.lambda, 8, Some(&opposite), true).unwrap();
    check(&mut failures, r.koszul && r.left_standard_koszul == Some(true) && r.right_standard_koszul == Some(true), || format!("{r:?}"));
    if let Err(e) = all_higher_vanish(&lt, 5) {
        failures.push(format!("Ext_Λ(Δ,Δ): {e}"));
    }
    let plain = Transfer::new(lt.table.clone(), SplittingMode::Lifted).unwrap();
    if let Err(e) = all_higher_vanish(&plain, 5) {
        failures.push(format!("Ext_Λ(Δ,Δ), lifted splitting: {e}"));
    }
    // The two-vertex example: the inclusion Δ(1) → Δ(2).
    let a2 = linear_quiver::<Q>(2, 0);
    for (grading, want) in [(Some(qext::presentation::Grading::PathLength), 1), (None, 0)] {
        let de = DualExtension::new(&a2, &a2, grading.clone()).unwrap();
        let t = ExtTable::build(&de.lambda, Family::Standards, 4).unwrap();
        let ids = t.ids(0, 1, 0);
        let got: Vec<i64> = ids.iter().map(|&id| t.elements[id].internal_degree).collect();
        check(&mut failures, got == vec![want], || format!("Hom(Δ1, Δ2) internal degrees {got:?} under {grading:?}, expected [{want}]"));
    }
    report(8, "Koszulity, vanishing higher products, internal degrees", 30, start, failures);
}

#[test]
fn criterion_09a_box_quiver_and_relations() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let b = build_family::<Q>(fam(5, 3)).unwrap();
    let (de, lt) = compatible(&b, &b, 8);
    let bx = compute_box(&lt, &de, 4).unwrap();
    let q = &bx.presentation.quiver;
    for s in 0..5 {
        for t in 0..5 {
            let got = q.arrows.iter().filter(|a| a.src == s && a.tgt == t).count();
            let want = usize::from(t > s && t - s <= 3);
            check(&mut failures, got == want, || format!("{got} arrows {} → {}", s + 1, t + 1));
        }
    }
    // α_i = i → i+1, γ₃ = 3 → 5.
    let arrow = |s: usize, t: usize| q.arrows.iter().position(|a| a.src == s - 1 && a.tgt == t - 1).unwrap();
    let path = |arrows: &[usize]| Path::from_arrows(q, arrows).unwrap();
    let expected = [
        path(&[arrow(1, 2), arrow(2, 3), arrow(3, 4)]),
        path(&[arrow(2, 3), arrow(3, 4), arrow(4, 5)]),
        path(&[arrow(1, 2), arrow(2, 3), arrow(3, 5)]),
    ];
    let mut cols: Vec<Path> = expected.to_vec();
    for r in &bx.presentation.relations {
        for (_, p) in &r.terms {
            if !cols.contains(p) {
                cols.push(p.clone());
            }
        }
    }
    let vec_of = |terms: &[(Q, Path)]| {
        let mut v = vec![Q::zero(); cols.len()];
        for (c, p) in terms {
            v[cols.iter().position(|x| x == p).unwrap()] += c.clone();
        }
        v
    };
    let got: Vec<Vec<Q>> = bx.presentation.relations.iter().map(|r| vec_of(&r.terms)).collect();
    let want: Vec<Vec<Q>> = expected.iter().map(|p| vec_of(&[(Q::one(), p.clone())])).collect();
    let rank = |rows: Vec<Vec<Q>>| Matrix::from_rows(cols.len(), rows).rank();
    let (rg, rw) = (rank(got.clone()), rank(want.clone()));
    let both = rank(got.into_iter().chain(want).collect());
    check(&mut failures, rg == 3 && rw == 3 && both == 3, || format!("relation ranks {rg}, {rw}, joint {both}"));
    report(9, "box quiver and relation space", 60, start, failures);
}

#[test]
fn criterion_09b_morita_multiplicities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let b = build_family::<Q>(fam(5, 3)).unwrap();
    let (de, lt) = compatible(&b, &b, 8);
    let bx = compute_box(&lt, &de, 4).unwrap();
    let want = vec![1, 1, 2, 4, 7];
    check(&mut failures, bx.t == want, || {
        format!("multiplicities {:?}, expected {want:?}; decompositions {:?}; composition factors {:?}", bx.t, bx.c, bx.composition)
    });
    report(9, "Morita multiplicities (1,1,2,4,7)", 60, start, failures);
}

/// A random directed algebra on at most four vertices with at most three relations.
fn random_directed(rng: &mut ChaCha8Rng) -> Presentation<Q> {
    let n = rng.gen_range(2..=4);
    let mut q = Quiver::new(n);
    for s in 0..n {
        for t in s + 1..n {
            let k = if t == s + 1 { rng.gen_range(1..=2) } else { rng.gen_range(0..=1) };
            for r in 0..k {
                q.add_arrow(&format!("a{}_{}_{r}", s + 1, t + 1), s, t);
            }
        }
    }
    // Paths of length two and three.
    let mut paths: Vec<Path> = Vec::new();
    for a in 0..q.arrows.len() {
        for b in 0..q.arrows.len() {
            if let Some(p) = Path::from_arrows(&q, &[a, b]) {
                for c in 0..q.arrows.len() {
                    if let Some(p3) = Path::from_arrows(&q, &[a, b, c]) {
                        paths.push(p3);
                    }
                }
                paths.push(p);
            }
        }
    }
    let mut pres = Presentation::new("random", q);
    let count = rng.gen_range(0..=3.min(paths.len()));
    for _ in 0..count {
        let p = paths[rng.gen_range(0..paths.len())].clone();
        let parallel: Vec<&Path> = paths.iter().filter(|x| x.src == p.src && x.tgt == p.tgt && **x != p).collect();
        let mut terms = vec![(Q::one(), p.clone())];
        if !parallel.is_empty() && rng.gen_bool(0.5) {
            let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
            if !c.is_zero() {
                terms.push((c, parallel[rng.gen_range(0..parallel.len())].clone()));
            }
        }
        if pres.relations.iter().all(|r| r.terms[0].1 != p) {
            pres.relations.push(Relation { terms });
        }
    }
    pres
}

#[test]
fn criterion_10_cross_oracle_on_random_directed_algebras() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut products, mut homs) = (0, 0);
    for case in 0..20 {
        let pres = random_directed(&mut rng);
        let alg = match Algebra::build(&pres) {
            Ok(a) => Arc::new(a),
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        for family in [Family::Simples, Family::Standards] {
            let table = Arc::new(ExtTable::build(&alg, family, 8).unwrap());
            for mode in [SplittingMode::Lifted, SplittingMode::Echelon] {
                let tr = Transfer::new(table.clone(), mode).unwrap();
                for t in tr.tuples(2) {
                    let (Some(m2), Some(y)) = (tr.m(&t).unwrap(), table.product(t[0], t[1]).unwrap()) else { continue };
                    products += 1;
                    let y = ExtClass { src: m2.src, tgt: m2.tgt, deg: m2.deg, coeffs: y.to_vec() };
                    let same = if is_zero(&y) { is_zero(&m2) } else { proportional(&m2, &y) == Some(Q::one()) };
                    check(&mut failures, same, || format!("case {case} {family:?} {mode:?}: m2{t:?} {:?} vs Yoneda {:?}", m2.coeffs, y.coeffs));
                }
            }
            let modules: Vec<Module<Q>> = (0..alg.n())
                .map(|i| match family {
                    Family::Simples => Module::simple(&alg, i).unwrap(),
                    Family::Standards => Module::standard(&alg, i).unwrap(),
                })
                .collect();
            for i in 0..alg.n() {
                for j in 0..alg.n() {
                    homs += 1;
                    let h = hom_space(&modules[i], &modules[j]).unwrap().len();
                    let e = table.dim(i, j, 0);
                    check(&mut failures, e == Some(h), || format!("case {case} {family:?}: Ext^0({}, {}) = {e:?}, Hom = {h}", i + 1, j + 1));
                }
            }
        }
    }
    check(&mut failures, products > 50 && homs > 100, || format!("only {products} products, {homs} Hom spaces"));
    report(10, "Yoneda m2 = transferred m2, Ext^0 = Hom on 20 random algebras", 60, start, failures);
}
