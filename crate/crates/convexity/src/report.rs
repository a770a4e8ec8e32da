//! Command implementations behind the command-line interface.
//!
//! Each command takes a geometry plus a [`RunConfig`] and produces a
//! [`RunOutcome`]: a deterministic JSON report, a pass/fail verdict, and
//! export artifacts for `--out`.  The `verify` command without an input
//! runs the full acceptance suite over the built-in corpus.

use num::bigint::BigInt;
use num::{BigRational, Zero};
use serde_json::{json, Value};

use crate::complex::{build_by_subdivision, h_vector, lattice_order_complex};
use crate::corpus;
use crate::enriched::EnrichedContext;
use crate::geometry::{BasePoset, ConvexGeometry, IdealDirection};
use crate::io;
use crate::poly::{self, Poly};
use crate::qsym::{verify_main_identity, FlagQSym};
use crate::sphere::{flip_complex, q_order_complex, reflect, QPoset};
use crate::subset::Subset;
use crate::{Error, Result};

/// Knobs shared by all commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub m_max: usize,
    pub max_facets: usize,
    pub emit_dot: bool,
    pub emit_off: bool,
    pub emit_json: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            m_max: 3,
            max_facets: 1_000_000,
            emit_dot: false,
            emit_off: false,
            emit_json: false,
        }
    }
}

/// What a command hands back to the binary: the report to print, the
/// verdict deciding the exit code, and `(file name, contents)` artifacts.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Value,
    pub passed: bool,
    pub artifacts: Vec<(String, String)>,
}

fn ensure_valid(g: &ConvexGeometry) -> Result<()> {
    let report = g.validate()?;
    if !report.is_valid() {
        let reasons: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidGeometry(reasons.join("; ")));
    }
    Ok(())
}

fn big_list(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(|x| json!(x.to_string())).collect())
}

fn geometry_header(g: &ConvexGeometry) -> Value {
    json!({
        "n": g.n(),
        "kind": g.kind(),
    })
}

/// Closed sets, lattice structure, and the distributivity facts.
pub fn cmd_lattice(g: &ConvexGeometry, cfg: &RunConfig) -> Result<RunOutcome> {
    ensure_valid(g)?;
    let l = g.closed_sets()?;
    let p = l.poset();
    let meet_distributive = p.is_meet_distributive()?;
    let join_distributive = p.is_join_distributive()?;
    let dual_join_distributive = p.dual().is_join_distributive()?;
    let ji = l.join_irreducibles();
    let ji_sets: Vec<String> = ji.iter().map(|&i| l.set(i).to_string()).collect();
    let rle: Vec<String> = l
        .reverse_linear_extension()
        .iter()
        .map(|&i| l.set(i).to_string())
        .collect();
    let passed = meet_distributive && ji.len() == g.n();
    let report = json!({
        "geometry": geometry_header(g),
        "closed_set_count": l.len(),
        "closed_sets": l.sets().iter().map(Subset::to_string).collect::<Vec<_>>(),
        "covers": p.cover_pairs().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "rank_counts": p.rank_counts(),
        "meet_distributive": meet_distributive,
        "join_distributive": join_distributive,
        "dual_join_distributive": dual_join_distributive,
        "eulerian": p.is_eulerian(),
        "mobius_bottom_top": p.mobius(p.bottom(), p.top())?.to_string(),
        "nu": p.nu().to_string(),
        "zeta_polynomial": io::poly_json(&p.zeta_polynomial()),
        "join_irreducibles": ji_sets,
        "reverse_linear_extension": rle,
        "passed": passed,
    });
    let mut artifacts = vec![];
    if cfg.emit_dot {
        artifacts.push(("lattice.dot".to_string(), io::poset_dot(p)));
    }
    if cfg.emit_json {
        artifacts.push((
            "lattice.json".to_string(),
            serde_json::to_string_pretty(&io::poset_json(p)).expect("serializable"),
        ));
    }
    Ok(RunOutcome {
        report,
        passed,
        artifacts,
    })
}

/// The stepwise subdivision from the simplex to the full order complex.
pub fn cmd_complex(g: &ConvexGeometry, cfg: &RunConfig) -> Result<RunOutcome> {
    ensure_valid(g)?;
    let l = g.closed_sets()?;
    let trace = build_by_subdivision(g, cfg.max_facets)?;
    let target = lattice_order_complex(&l, false, cfg.max_facets)?;
    let matches_order_complex = trace.final_complex == target;
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "set": s.set.to_string(),
                "extreme_points": s.ext.to_string(),
                "principal": s.principal,
                "facets_after": s.facets_after,
            })
        })
        .collect();
    let f = trace.final_complex.f_vector(cfg.max_facets)?;
    let passed = matches_order_complex;
    let report = json!({
        "geometry": geometry_header(g),
        "initial_facets": trace.initial.facet_count(),
        "steps": steps,
        "final_f_vector": big_list(&f),
        "final_facets": trace.final_complex.facet_count(),
        "matches_order_complex": matches_order_complex,
        "passed": passed,
    });
    let mut artifacts = vec![];
    if cfg.emit_json {
        artifacts.push((
            "complex.json".to_string(),
            serde_json::to_string_pretty(&io::complex_json(&trace.final_complex, cfg.max_facets)?)
                .expect("serializable"),
        ));
    }
    Ok(RunOutcome {
        report,
        passed,
        artifacts,
    })
}

/// All strictly decreasing chains of closed sets ending at `∅`.
fn decreasing_chains(l: &crate::lattice::ClosedSetLattice) -> Vec<Vec<Subset>> {
    let sets: Vec<Subset> = l.sets().to_vec();
    let mut chains = vec![];
    let mut stack: Vec<Vec<Subset>> = vec![vec![Subset::EMPTY]];
    while let Some(c) = stack.pop() {
        if c.len() >= 2 {
            chains.push(c.clone());
        }
        let head = c[0];
        for &s in &sets {
            if head.is_proper_subset_of(s) {
                let mut bigger = vec![s];
                bigger.extend(c.iter().copied());
                stack.push(bigger);
            }
        }
    }
    chains.sort();
    chains
}

fn fiber_rows(q: &QPoset, chains: &[Vec<Subset>]) -> Result<(usize, bool)> {
    let mut all_agree = true;
    for c in chains {
        let direct = q.fiber_count(c)?;
        if direct != q.fiber_count_by_nu(c)? || direct != q.fiber_count_by_ext(c)? {
            all_agree = false;
        }
    }
    Ok((chains.len(), all_agree))
}

/// The reflected sphere, the signed poset, and the facts tying them.
pub fn cmd_sphere(g: &ConvexGeometry, cfg: &RunConfig) -> Result<RunOutcome> {
    ensure_valid(g)?;
    let n = g.n();
    let l = g.closed_sets()?;
    let pm = reflect(g, cfg.max_facets)?;
    let q = QPoset::from_lattice(l.clone())?;
    let oc = q_order_complex(&q, cfg.max_facets)?;
    let equals_order_complex = pm == oc;
    let eulerian = q.is_eulerian();
    let f = pm.f_vector(cfg.max_facets)?;
    let h = h_vector(&f);
    let euler = pm.euler_characteristic(cfg.max_facets)?;
    let expected_euler = if n % 2 == 1 {
        BigInt::from(2)
    } else {
        BigInt::zero()
    };
    let pseudomanifold = pm.is_closed_pseudomanifold();
    let h_palindromic = h.iter().eq(h.iter().rev());
    let mut flips_ok = true;
    for mask in Subset::full(n).submasks() {
        if flip_complex(&pm, mask) != pm {
            flips_ok = false;
            break;
        }
    }
    // fiber counts along closed-set chains: exhaustive when the lattice is
    // small, maximal chains otherwise
    let chains = if l.len() <= 40 {
        decreasing_chains(&l)
    } else {
        l.poset()
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().rev().map(|i| l.set(i)).collect())
            .collect()
    };
    let (fiber_checked, fibers_ok) = fiber_rows(&q, &chains)?;
    let passed = equals_order_complex
        && eulerian
        && euler == expected_euler
        && pseudomanifold
        && h_palindromic
        && flips_ok
        && fibers_ok;
    let report = json!({
        "geometry": geometry_header(g),
        "f_vector": big_list(&f),
        "h_vector": big_list(&h),
        "h_palindromic": h_palindromic,
        "euler_characteristic": euler.to_string(),
        "expected_euler_characteristic": expected_euler.to_string(),
        "closed_pseudomanifold": pseudomanifold,
        "facets": pm.facet_count(),
        "q_size": q.len(),
        "q_rank": q.poset().rank(q.top()),
        "q_eulerian": eulerian,
        "equals_q_order_complex": equals_order_complex,
        "sign_flip_invariant": flips_ok,
        "fiber_chains_checked": fiber_checked,
        "fiber_counts_agree": fibers_ok,
        "passed": passed,
    });
    let mut artifacts = vec![];
    if cfg.emit_json {
        artifacts.push((
            "sphere.json".to_string(),
            serde_json::to_string_pretty(&io::complex_json(&pm, cfg.max_facets)?)
                .expect("serializable"),
        ));
        artifacts.push((
            "qposet.json".to_string(),
            serde_json::to_string_pretty(&io::qposet_json(&q)).expect("serializable"),
        ));
    }
    if cfg.emit_dot {
        artifacts.push(("qposet.dot".to_string(), io::poset_dot(q.poset())));
    }
    if cfg.emit_off {
        artifacts.push(("sphere.off".to_string(), io::off_export(n, &pm)?));
    }
    Ok(RunOutcome {
        report,
        passed,
        artifacts,
    })
}

/// The flag-function identity `2·F_Q = ϑ(F_{L ∪ {0̂}})`.
pub fn cmd_qsym(g: &ConvexGeometry, cfg: &RunConfig) -> Result<RunOutcome> {
    ensure_valid(g)?;
    let (ok, lhs, rhs) = verify_main_identity(g)?;
    let l = g.closed_sets()?;
    // data: the flag function specialized at 1..m_max against the zeta
    // polynomial of the same poset
    let f_l = FlagQSym::flag_f(l.poset());
    let z = l.poset().zeta_polynomial();
    let mut specializations = vec![];
    let mut specializations_agree = true;
    for m in 1..=cfg.m_max {
        let via_flag = BigRational::from(f_l.specialize_ones(m));
        let via_zeta = z.eval_int(m as i64);
        if via_flag != via_zeta {
            specializations_agree = false;
        }
        specializations.push(json!({
            "m": m,
            "flag_specialization": via_flag.to_string(),
            "zeta_value": via_zeta.to_string(),
        }));
    }
    let passed = ok && specializations_agree;
    let report = json!({
        "geometry": geometry_header(g),
        "two_f_q": io::flag_json(&lhs),
        "theta_of_flag": io::flag_json(&rhs),
        "identity_holds": ok,
        "specializations": specializations,
        "passed": passed,
    });
    let mut artifacts = vec![];
    if cfg.emit_json {
        artifacts.push((
            "qsym.json".to_string(),
            serde_json::to_string_pretty(&json!({
                "two_f_q": io::flag_json(&lhs),
                "theta_of_flag": io::flag_json(&rhs),
            }))
            .expect("serializable"),
        ));
    }
    Ok(RunOutcome {
        report,
        passed,
        artifacts,
    })
}

/// Enriched extremal function counts and the polynomial identities.
pub fn cmd_enriched(g: &ConvexGeometry, cfg: &RunConfig) -> Result<RunOutcome> {
    ensure_valid(g)?;
    let ctx = EnrichedContext::new(g)?;
    let n = g.n();
    let zbar = ctx.zbar();
    let zeta = ctx.zeta();
    let mut rows = vec![];
    let mut counts_ok = true;
    for m in 1..=cfg.m_max {
        let predicted = zbar.eval_int(m as i64);
        let feasible = (2 * m as u128).pow(n as u32) <= cfg.max_facets as u128;
        if feasible {
            let functions = ctx.enumerate_extremal(m, cfg.max_facets)?;
            let enumerated = BigInt::from(functions.len());
            let mut roundtrip = true;
            for f in &functions {
                let chain = ctx.function_to_multichain(f, m)?;
                if ctx.multichain_to_function(&chain)? != *f {
                    roundtrip = false;
                }
            }
            if BigRational::from(enumerated.clone()) != predicted || !roundtrip {
                counts_ok = false;
            }
            rows.push(json!({
                "m": m,
                "enumerated": enumerated.to_string(),
                "predicted": predicted.to_string(),
                "bijection_roundtrip": roundtrip,
            }));
        } else {
            rows.push(json!({
                "m": m,
                "enumerated": Value::Null,
                "predicted": predicted.to_string(),
                "skipped": "candidate space exceeds the facet cap",
            }));
        }
    }
    let h_identity = ctx.verify_h_identity();
    let reciprocity = ctx.verify_reciprocity();
    let h = ctx.h_vector();
    let h_real_rooted = ctx.h_real_rooted()?;
    // one-point extension doubles the zeta count
    let extended = g.one_point_extension()?;
    let ext_ctx = EnrichedContext::new(&extended)?;
    let extension_ok = ext_ctx.zbar() == zeta.scale_int(&BigInt::from(2));
    let passed = counts_ok && h_identity && reciprocity && extension_ok;
    let report = json!({
        "geometry": geometry_header(g),
        "counts": rows,
        "zeta_polynomial": io::poly_json(&zeta),
        "zbar_polynomial": io::poly_json(&zbar),
        "h_vector": big_list(&h),
        "h_real_rooted": h_real_rooted,
        "h_identity_holds": h_identity,
        "self_reciprocity_holds": reciprocity,
        "extension_doubles_zeta": extension_ok,
        "passed": passed,
    });
    let mut artifacts = vec![];
    if cfg.emit_json {
        artifacts.push((
            "enriched.json".to_string(),
            serde_json::to_string_pretty(&json!({
                "zeta": io::poly_json(&zeta),
                "zbar": io::poly_json(&zbar),
                "h_vector": big_list(&h),
            }))
            .expect("serializable"),
        ));
    }
    Ok(RunOutcome {
        report,
        passed,
        artifacts,
    })
}

/// One acceptance criterion's verdict.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn pass(id: usize, name: &'static str, detail: String) -> CriterionResult {
    CriterionResult {
        id,
        name,
        passed: true,
        detail,
    }
}

fn fail(id: usize, name: &'static str, detail: String) -> CriterionResult {
    CriterionResult {
        id,
        name,
        passed: false,
        detail,
    }
}

const ACCEPTANCE_CAP: usize = 1_000_000;

/// Criterion 1: the three-collinear geometry has exactly the seven closed
/// sets with the endpoints extreme in the full set.
pub fn criterion_closed_sets() -> CriterionResult {
    const ID: usize = 1;
    const NAME: &str = "three collinear points: closed sets and extreme points";
    let g = corpus::collinear(3);
    let l = match g.closed_sets() {
        Ok(l) => l,
        Err(e) => return fail(ID, NAME, format!("lattice construction failed: {e}")),
    };
    let got: Vec<String> = l.sets().iter().map(Subset::to_string).collect();
    let want = ["{}", "{1}", "{2}", "{3}", "{1,2}", "{2,3}", "{1,2,3}"];
    if got != want {
        return fail(ID, NAME, format!("closed sets {got:?}"));
    }
    let ext = g.ext(Subset::full(3));
    if ext.to_string() != "{1,3}" {
        return fail(ID, NAME, format!("ext of the full set is {ext}"));
    }
    pass(ID, NAME, "7 closed sets; ext({1,2,3}) = {1,3}".to_string())
}

/// Criterion 2: the stepwise subdivision grows 1 → 2 → 3 → 4 facets, then
/// stays put, and lands exactly on the order complex.
pub fn criterion_subdivision() -> CriterionResult {
    const ID: usize = 2;
    const NAME: &str = "three collinear points: stepwise subdivision";
    let g = corpus::collinear(3);
    let trace = match build_by_subdivision(&g, ACCEPTANCE_CAP) {
        Ok(t) => t,
        Err(e) => return fail(ID, NAME, format!("subdivision failed: {e}")),
    };
    let mut counts = vec![trace.initial.facet_count()];
    counts.extend(trace.steps.iter().map(|s| s.facets_after));
    if counts != [1, 2, 3, 4, 4, 4, 4] {
        return fail(ID, NAME, format!("facet counts along the way: {counts:?}"));
    }
    let l = g.closed_sets().expect("lattice exists");
    let target = lattice_order_complex(&l, false, ACCEPTANCE_CAP).expect("order complex");
    if trace.final_complex != target {
        return fail(
            ID,
            NAME,
            "final complex is not the order complex".to_string(),
        );
    }
    pass(
        ID,
        NAME,
        "facet counts 1,2,3,4 then constant; equals the order complex".to_string(),
    )
}

/// Criterion 3: the reflected sphere of three collinear points.
pub fn criterion_reflected_sphere() -> CriterionResult {
    const ID: usize = 3;
    const NAME: &str = "three collinear points: reflected sphere";
    let g = corpus::collinear(3);
    let pm = match reflect(&g, ACCEPTANCE_CAP) {
        Ok(c) => c,
        Err(e) => return fail(ID, NAME, format!("reflection failed: {e}")),
    };
    let f = pm.f_vector(ACCEPTANCE_CAP).expect("small complex");
    let expected_f: Vec<BigInt> = [1, 18, 48, 32].iter().map(|&x| BigInt::from(x)).collect();
    if f != expected_f {
        return fail(ID, NAME, format!("f-vector {f:?}"));
    }
    if pm.euler_characteristic(ACCEPTANCE_CAP).expect("small") != BigInt::from(2) {
        return fail(ID, NAME, "Euler characteristic is not 2".to_string());
    }
    let h = h_vector(&f);
    let expected_h: Vec<BigInt> = [1, 15, 15, 1].iter().map(|&x| BigInt::from(x)).collect();
    if h != expected_h {
        return fail(ID, NAME, format!("h-vector {h:?}"));
    }
    if h.iter().ne(h.iter().rev()) {
        return fail(ID, NAME, "h-vector is not symmetric".to_string());
    }
    if !pm.is_closed_pseudomanifold() {
        return fail(ID, NAME, "not a closed pseudomanifold".to_string());
    }
    for mask in Subset::full(3).submasks() {
        if flip_complex(&pm, mask) != pm {
            return fail(ID, NAME, format!("sign flip by {mask} is not a symmetry"));
        }
    }
    pass(
        ID,
        NAME,
        "f = (18,48,32), χ = 2, h = (1,15,15,1), pseudomanifold, sign-flip symmetric".to_string(),
    )
}

/// Criterion 4: the reflected complex equals the order complex of the
/// signed poset with its bounds removed, across the whole corpus.
pub fn criterion_order_complex_equality() -> CriterionResult {
    const ID: usize = 4;
    const NAME: &str = "reflected complex equals the signed-poset order complex (corpus)";
    let mut checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        let result = (|| -> Result<bool> {
            let l = g.closed_sets()?;
            let pm = reflect(&g, ACCEPTANCE_CAP)?;
            let q = QPoset::from_lattice(l)?;
            let oc = q_order_complex(&q, ACCEPTANCE_CAP)?;
            Ok(pm == oc)
        })();
        match result {
            Ok(true) => checked += 1,
            Ok(false) => return fail(ID, NAME, format!("mismatch for {name}")),
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        }
    }
    pass(ID, NAME, format!("{checked} geometries agree"))
}

/// Criterion 5: the signed poset is Eulerian of rank n+1 for every corpus
/// geometry.
pub fn criterion_q_eulerian() -> CriterionResult {
    const ID: usize = 5;
    const NAME: &str = "signed poset is Eulerian of rank n+1 (corpus)";
    let mut checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        let q = match QPoset::new(&g) {
            Ok(q) => q,
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        };
        if q.poset().rank(q.top()) != g.n() + 1 {
            return fail(ID, NAME, format!("{name}: rank is not n+1"));
        }
        if !q.is_eulerian() {
            return fail(ID, NAME, format!("{name}: not Eulerian"));
        }
        checked += 1;
    }
    pass(ID, NAME, format!("{checked} geometries Eulerian"))
}

/// Criterion 6: fibers of the underlying-set map match the ν products on
/// every decreasing chain, and ν of Boolean lattices is a power of two.
pub fn criterion_fibers() -> CriterionResult {
    const ID: usize = 6;
    const NAME: &str = "fiber counts match ν products (corpus, n ≤ 5)";
    let mut chains_checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        if g.n() > 5 {
            continue;
        }
        let result = (|| -> Result<usize> {
            let l = g.closed_sets()?;
            let q = QPoset::from_lattice(l.clone())?;
            let chains = decreasing_chains(&l);
            for c in &chains {
                let direct = q.fiber_count(c)?;
                if direct != q.fiber_count_by_nu(c)? {
                    return Err(Error::InvalidPoset(format!("ν product disagrees on {c:?}")));
                }
                if direct != q.fiber_count_by_ext(c)? {
                    return Err(Error::InvalidPoset(format!(
                        "extreme-point power disagrees on {c:?}"
                    )));
                }
            }
            Ok(chains.len())
        })();
        match result {
            Ok(k) => chains_checked += k,
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        }
    }
    for k in 1..=5usize {
        let p = corpus::boolean(k)
            .closed_sets()
            .expect("boolean lattice")
            .poset()
            .clone();
        if p.nu() != BigInt::from(1u64 << k) {
            return fail(
                ID,
                NAME,
                format!("ν of the rank-{k} Boolean lattice is not 2^{k}"),
            );
        }
    }
    pass(
        ID,
        NAME,
        format!("{chains_checked} chains agree; ν(Boolean rank k) = 2^k for k ≤ 5"),
    )
}

/// Criterion 7: the flag-function identity on every corpus geometry with
/// n ≤ 5.
pub fn criterion_flag_identity() -> CriterionResult {
    const ID: usize = 7;
    const NAME: &str = "2·F_Q = ϑ(F) identity (corpus, n ≤ 5)";
    let mut checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        if g.n() > 5 {
            continue;
        }
        match verify_main_identity(&g) {
            Ok((true, _, _)) => checked += 1,
            Ok((false, lhs, rhs)) => {
                return fail(ID, NAME, format!("{name}: {lhs} ≠ {rhs}"));
            }
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        }
    }
    pass(
        ID,
        NAME,
        format!("{checked} geometries agree coefficient-wise"),
    )
}

/// Criterion 8: enriched extremal function counts equal Z̄(Q, m), with the
/// bijection round-tripping on every enumerated function.
pub fn criterion_enriched_counts() -> CriterionResult {
    const ID: usize = 8;
    const NAME: &str = "enriched extremal counts equal Z̄(Q, m) with round-trips";
    // the pinned example first
    let ctx = match EnrichedContext::new(&corpus::collinear(3)) {
        Ok(c) => c,
        Err(e) => return fail(ID, NAME, format!("three collinear: {e}")),
    };
    let fs = match ctx.enumerate_extremal(1, ACCEPTANCE_CAP) {
        Ok(f) => f,
        Err(e) => return fail(ID, NAME, format!("three collinear: {e}")),
    };
    let got: Vec<Vec<i64>> = fs.iter().map(|f| f.values().to_vec()).collect();
    let want = [
        vec![-1, 1, -1],
        vec![-1, 1, 1],
        vec![1, 1, -1],
        vec![1, 1, 1],
    ];
    if got != want {
        return fail(ID, NAME, format!("three collinear, m = 1: {got:?}"));
    }
    let mut instances = 0usize;
    for (name, g) in corpus::corpus_geometries() {
        let ctx = match EnrichedContext::new(&g) {
            Ok(c) => c,
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        };
        let zbar = ctx.zbar();
        for m in 1..=3usize {
            if (2 * m as u128).pow(g.n() as u32) > ACCEPTANCE_CAP as u128 {
                continue;
            }
            let result = (|| -> Result<usize> {
                let functions = ctx.enumerate_extremal(m, ACCEPTANCE_CAP)?;
                let predicted = zbar.eval_int(m as i64);
                if BigRational::from(BigInt::from(functions.len())) != predicted {
                    return Err(Error::NotExtremal(format!(
                        "count {} ≠ Z̄({m}) = {predicted}",
                        functions.len()
                    )));
                }
                for f in &functions {
                    let chain = ctx.function_to_multichain(f, m)?;
                    if ctx.multichain_to_function(&chain)? != *f {
                        return Err(Error::NotExtremal(format!("{f} does not round-trip")));
                    }
                }
                Ok(functions.len())
            })();
            match result {
                Ok(k) => instances += k,
                Err(e) => return fail(ID, NAME, format!("{name}, m = {m}: {e}")),
            }
        }
    }
    pass(
        ID,
        NAME,
        format!("pinned m = 1 example matches; {instances} functions round-trip"),
    )
}

/// Criterion 9: self-reciprocity of both polynomials and the
/// generating-function identity (with denominator exponent n + 2) on every
/// corpus geometry.
pub fn criterion_polynomial_identities() -> CriterionResult {
    const ID: usize = 9;
    const NAME: &str = "self-reciprocity and the h generating function (corpus)";
    let mut checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        let ctx = match EnrichedContext::new(&g) {
            Ok(c) => c,
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        };
        if !ctx.verify_reciprocity() {
            return fail(ID, NAME, format!("{name}: reciprocity fails"));
        }
        if !ctx.verify_h_identity() {
            return fail(
                ID,
                NAME,
                format!("{name}: generating-function identity fails"),
            );
        }
        checked += 1;
    }
    pass(
        ID,
        NAME,
        format!("{checked} geometries; denominator exponent n+2 throughout"),
    )
}

/// Criterion 10: the one-point extension doubles the zeta count.
pub fn criterion_extension() -> CriterionResult {
    const ID: usize = 10;
    const NAME: &str = "one-point extension doubles Z(Q, m) (corpus, m ≤ 3)";
    let mut checked = 0;
    for (name, g) in corpus::corpus_geometries() {
        let result = (|| -> Result<()> {
            let ctx = EnrichedContext::new(&g)?;
            let extended = g.one_point_extension()?;
            let ext_ctx = EnrichedContext::new(&extended)?;
            let z = ctx.zeta();
            let zb = ext_ctx.zbar();
            for m in 1..=3i64 {
                let lhs = zb.eval_int(m);
                let rhs = z.eval_int(m) * BigRational::from(BigInt::from(2));
                if lhs != rhs {
                    return Err(Error::InvalidPoset(format!(
                        "m = {m}: Z̄' = {lhs} but 2Z = {rhs}"
                    )));
                }
            }
            Ok(())
        })();
        match result {
            Ok(()) => checked += 1,
            Err(e) => return fail(ID, NAME, format!("{name}: {e}")),
        }
    }
    pass(ID, NAME, format!("{checked} geometries double correctly"))
}

/// Criterion 11: exact real-rootedness on the pinned suite, and the full
/// poset-to-h pipeline runs end to end.
pub fn criterion_real_rootedness() -> CriterionResult {
    const ID: usize = 11;
    const NAME: &str = "real-rootedness is exact; the poset-to-h pipeline runs";
    let sym = Poly::from_int_coeffs(&[1, 15, 15, 1]);
    match poly::is_real_rooted(&sym) {
        Ok(true) => {}
        other => return fail(ID, NAME, format!("(1,15,15,1) judged {other:?}")),
    }
    let t2 = Poly::from_int_coeffs(&[1, 0, 1]);
    match poly::is_real_rooted(&t2) {
        Ok(false) => {}
        other => return fail(ID, NAME, format!("t²+1 judged {other:?}")),
    }
    // an arbitrary five-point poset through the whole pipeline
    let result = (|| -> Result<(Vec<BigInt>, bool)> {
        let poset = BasePoset::new(5, &[(1, 3), (2, 3), (2, 4), (3, 5)])?;
        let g = ConvexGeometry::poset_ideal(poset, IdealDirection::Upper)?;
        let ctx = EnrichedContext::new(&g)?;
        if !ctx.verify_h_identity() {
            return Err(Error::InvalidPoset("pipeline identity failed".into()));
        }
        Ok((ctx.h_vector(), ctx.h_real_rooted()?))
    })();
    match result {
        Ok((h, rooted)) => pass(
            ID,
            NAME,
            format!("suite values pinned; pipeline h = {h:?}, real-rooted = {rooted}"),
        ),
        Err(e) => fail(ID, NAME, format!("pipeline failed: {e}")),
    }
}

/// Every acceptance criterion in order.
pub fn all_criteria() -> Vec<CriterionResult> {
    vec![
        criterion_closed_sets(),
        criterion_subdivision(),
        criterion_reflected_sphere(),
        criterion_order_complex_equality(),
        criterion_q_eulerian(),
        criterion_fibers(),
        criterion_flag_identity(),
        criterion_enriched_counts(),
        criterion_polynomial_identities(),
        criterion_extension(),
        criterion_real_rootedness(),
    ]
}

/// The verification driver.  With a geometry it runs the whole identity
/// suite on that input; without one it runs the acceptance criteria over
/// the built-in corpus.
pub fn cmd_verify(g: Option<&ConvexGeometry>, cfg: &RunConfig) -> Result<RunOutcome> {
    match g {
        Some(g) => {
            ensure_valid(g)?;
            let lattice = cmd_lattice(
                g,
                &RunConfig {
                    emit_dot: false,
                    emit_off: false,
                    emit_json: false,
                    ..cfg.clone()
                },
            )?;
            let complex = cmd_complex(
                g,
                &RunConfig {
                    emit_dot: false,
                    emit_off: false,
                    emit_json: false,
                    ..cfg.clone()
                },
            )?;
            let sphere = cmd_sphere(
                g,
                &RunConfig {
                    emit_dot: false,
                    emit_off: false,
                    emit_json: false,
                    ..cfg.clone()
                },
            )?;
            let qsym = cmd_qsym(
                g,
                &RunConfig {
                    emit_dot: false,
                    emit_off: false,
                    emit_json: false,
                    ..cfg.clone()
                },
            )?;
            let enriched = cmd_enriched(
                g,
                &RunConfig {
                    emit_dot: false,
                    emit_off: false,
                    emit_json: false,
                    ..cfg.clone()
                },
            )?;
            let passed =
                lattice.passed && complex.passed && sphere.passed && qsym.passed && enriched.passed;
            let report = json!({
                "geometry": geometry_header(g),
                "lattice": lattice.report,
                "complex": complex.report,
                "sphere": sphere.report,
                "qsym": qsym.report,
                "enriched": enriched.report,
                "passed": passed,
            });
            let mut artifacts = vec![];
            if cfg.emit_json {
                artifacts.push((
                    "verify.json".to_string(),
                    serde_json::to_string_pretty(&report).expect("serializable"),
                ));
            }
            Ok(RunOutcome {
                report,
                passed,
                artifacts,
            })
        }
        None => {
            let results = all_criteria();
            let passed = results.iter().all(|r| r.passed);
            let rows: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    })
                })
                .collect();
            let report = json!({
                "criteria": rows,
                "passed": passed,
            });
            let mut artifacts = vec![];
            if cfg.emit_json {
                artifacts.push((
                    "verify.json".to_string(),
                    serde_json::to_string_pretty(&report).expect("serializable"),
                ));
            }
            Ok(RunOutcome {
                report,
                passed,
                artifacts,
            })
        }
    }
}
