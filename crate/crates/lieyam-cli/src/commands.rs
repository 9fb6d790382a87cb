//! Command implementations: load inputs, run the library checks and
//! assemble a [`VerificationReport`].

use std::path::Path;
use std::time::Instant;

use lieyam::cohomology::{YamagutiComplex, DEFAULT_YAMAGUTI_CAP};
use lieyam::deform::{nijenhuis_structure_report, DeformationData, NijenhuisStructure};
use lieyam::exact::invert;
use lieyam::fixtures::random_valid_pair;
use lieyam::io::{load_algebra, load_operator, load_pair, operator_to_value};
use lieyam::pair::{PairComplex, DEFAULT_PAIR_CAP};
use lieyam::quadratic::{
    dual_nijenhuis_report, form_compatibility, invariance_transport, invariant_form_report,
    is_dual_nijenhuis, skew_endomorphism_report, pi_sharp, r_matrix_report, rb_nijenhuis_report,
    rbn_to_rmn, rmatrix_nijenhuis_report, rmn_to_rbn, search_invariant_forms, QuadraticForm,
    TransportSide,
};
use lieyam::rota_baxter::{
    compatibility_identities, is_compatible_pair, is_relative_rb, nijenhuis_from_pair, rbn_report,
    relative_rb_report, search_compatible_invertible, search_nijenhuis, search_relative_rb,
    strong_condition_report, RBNTriple, RelativeRBOperator, COMPATIBILITY_SAMPLES,
};
use lieyam::{CheckReport, CheckResult, Error, LieYRepPair, LieYamagutiAlgebra, Matrix, Rational, Tensor};
use rand_chacha::rand_core::SeedableRng;
use serde_json::{json, Value};

use crate::report::VerificationReport;
use crate::{CheckKind, Cli, Command, ComplexKind, QuadraticCommand, SearchCommand};

/// Exit code for an error raised outside any check.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::ConsequenceViolated(_)
        | Error::InternalConsistency(_)
        | Error::IncompatibleCrossCheck(_)
        | Error::DualRouteDisagreement(_) => 3,
        _ => 2,
    }
}

fn is_consequence_error(e: &Error) -> bool {
    error_code(e) == 3
}

fn single(c: CheckResult) -> CheckReport {
    CheckReport { checks: vec![c] }
}

fn tensor_value(t: &Tensor) -> Value {
    json!({
        "shape": t.shape(),
        "entries": t.data().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn deformation_value(d: &DeformationData) -> Value {
    let table = |t: &Vec<Vec<Matrix>>| -> Value {
        Value::Array(
            t.iter()
                .map(|row| Value::Array(row.iter().map(operator_to_value).collect()))
                .collect(),
        )
    };
    json!({
        "phi": tensor_value(&d.phi),
        "phi1": tensor_value(&d.phi1),
        "phi2": tensor_value(&d.phi2),
        "varrho": d.varrho.iter().map(operator_to_value).collect::<Vec<_>>(),
        "varpi1": table(&d.varpi1),
        "varpi2": table(&d.varpi2),
    })
}

fn operators_value(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(operator_to_value).collect())
}

fn label(p: &Path) -> String {
    p.display().to_string()
}

pub fn run(cli: &Cli) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Check { kind, file } => check(*kind, file, cli.seed)?,
        Command::Cohomology {
            pair,
            degree,
            cap,
            complex,
        } => cohomology(pair, *degree, cap.or(cli.degree_cap), *complex, cli.seed)?,
        Command::VerifyNijenhuis { algebra, n } => {
            let a = load_algebra(algebra)?;
            let n = load_operator(n)?;
            let mut r = VerificationReport::new(format!("Nijenhuis operator on {}", label(algebra)), cli.seed);
            r.checks("", a.nijenhuis_report(&n)?);
            r
        }
        Command::VerifyNijenhuisStructure { pair, n, s } => nijenhuis_structure(pair, n, s, cli.seed)?,
        Command::VerifyRbo { pair, t } => rbo(pair, t, cli.seed)?,
        Command::VerifyRbn(a) => rbn(&a.pair, &a.t, &a.s, &a.n, cli.seed)?,
        Command::VerifyCompatible { pair, t1, t2 } => compatible(pair, t1, t2, cli.seed)?,
        Command::VerifyStrong { pair, t, s, n } => strong(pair, t, s, n.as_deref(), cli.seed)?,
        Command::Deform { pair, n, s, .. } => deform(pair, n, s, cli.seed)?,
        Command::Quadratic { action } => quadratic(action, cli.seed)?,
        Command::Search { target } => search(target, cli.seed)?,
    };
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

fn check(kind: CheckKind, file: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let mut r = VerificationReport::new(format!("{} {}", format!("{kind:?}").to_lowercase(), label(file)), seed);
    let algebra_only = kind == CheckKind::Algebra;
    let (a, pair) = if algebra_only {
        (load_algebra(file)?, None)
    } else {
        let p = load_pair(file)?;
        (p.algebra.clone(), Some(p))
    };
    if kind != CheckKind::Rep {
        r.checks("", a.check_axioms());
    }
    if let Some(p) = pair {
        let defining = p.rep.check_representation(&p.algebra)?;
        let ok = defining.all_passed();
        r.checks("", defining);
        let derived = p.rep.check_derived_identities(&p.algebra)?;
        if ok {
            r.consequences("", derived);
        } else {
            r.checks("", derived);
        }
    }
    Ok(r)
}

fn cohomology(
    pair: &Path,
    degree: usize,
    cap: Option<usize>,
    complex: ComplexKind,
    seed: u64,
) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let mut r = VerificationReport::new(
        format!("cohomology of degree {degree} of {}", label(pair)),
        seed,
    );
    if degree == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    match complex {
        ComplexKind::Pair => {
            let c = PairComplex::new(&p)?.with_cap(cap.unwrap_or(DEFAULT_PAIR_CAP));
            let dim = c.cohomology_dim(degree)?;
            if degree > 1 {
                let f = c.delta_squared_failure(degree - 1)?;
                r.checks("", single(column_check("delta-squared", f)));
            }
            if degree <= 2 {
                let f = c.direct_vs_lifted_failure(degree)?;
                r.checks("", single(column_check("direct-vs-lifted", f)));
            }
            r.value("complex", json!("pair"));
            r.value("dim", json!(dim));
            r.value("cochain_dim", json!(c.cochain_len(degree)));
        }
        ComplexKind::Yamaguti => {
            let c = YamagutiComplex::new(&p.algebra, &p.rep)?.with_cap(cap.unwrap_or(DEFAULT_YAMAGUTI_CAP));
            let dim = c.cohomology_dim(degree)?;
            if degree > 1 {
                let f = c.delta_squared_failure(degree - 1)?;
                r.checks("", single(column_check("delta-squared", f)));
            }
            r.value("complex", json!("yamaguti"));
            r.value("dim", json!(dim));
            r.value("cochain_dim", json!(c.cochain_len(degree)));
        }
    }
    Ok(r)
}

fn column_check(name: &str, failure: Option<usize>) -> CheckResult {
    match failure {
        None => CheckResult::pass(name),
        Some(j) => CheckResult::fail(
            name,
            Some(lieyam::Witness {
                tuple: vec![j],
                residual: vec!["nonzero".into()],
                t_order: None,
            }),
        ),
    }
}

fn nijenhuis_structure(pair: &Path, n: &Path, s: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let (n, s) = (load_operator(n)?, load_operator(s)?);
    let mut r = VerificationReport::new(format!("Nijenhuis structure on {}", label(pair)), seed);
    let full = nijenhuis_structure_report(&p, &n, &s)?;
    let defining_ok = full
        .checks
        .iter()
        .filter(|c| c.name != "structure-D")
        .all(|c| c.passed);
    let (defining, derived): (Vec<_>, Vec<_>) = full.checks.into_iter().partition(|c| c.name != "structure-D");
    r.checks("", CheckReport { checks: defining });
    if defining_ok {
        r.consequences("", CheckReport { checks: derived });
        match NijenhuisStructure::new(&p, n, s) {
            Ok(ns) => {
                r.consequences("consequence/", ns.triviality_report()?);
                r.consequences("consequence/", ns.hat_rep_report()?);
            }
            Err(e) => r.error("consequence/construct", &e, true),
        }
    }
    Ok(r)
}

fn rbo(pair: &Path, t: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let t = load_operator(t)?;
    let mut r = VerificationReport::new(format!("relative Rota-Baxter operator on {}", label(pair)), seed);
    let defining = relative_rb_report(&p, &t)?;
    let ok = defining.all_passed();
    r.checks("", defining);
    if ok {
        let op = RelativeRBOperator::new(&p, t)?;
        r.consequences("subadjacent-axioms/", op.subadjacent_unchecked().check_axioms());
        r.consequences("pre-lie-yamaguti/", op.pre_ly_report());
    }
    Ok(r)
}

fn rbn(pair: &Path, t: &Path, s: &Path, n: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let (t, s, n) = (load_operator(t)?, load_operator(s)?, load_operator(n)?);
    let mut r = VerificationReport::new(
        format!("relative Rota-Baxter-Nijenhuis structure on {}", label(pair)),
        seed,
    );
    let full = rbn_report(&p, &t, &s, &n)?;
    let is_derived = |name: &str| name == "nijenhuis-structure/structure-D";
    let defining_ok = full.checks.iter().filter(|c| !is_derived(&c.name)).all(|c| c.passed);
    let (defining, derived): (Vec<_>, Vec<_>) = full.checks.into_iter().partition(|c| !is_derived(&c.name));
    r.checks("", CheckReport { checks: defining });
    if defining_ok {
        r.consequences("", CheckReport { checks: derived });
        match RBNTriple::new(&p, t, s, n) {
            Ok(tr) => r.consequences("consequence/", tr.consequences_report()?),
            Err(e) => r.error("consequence/construct", &e, true),
        }
    }
    Ok(r)
}

fn compatible(pair: &Path, t1: &Path, t2: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let (t1, t2) = (load_operator(t1)?, load_operator(t2)?);
    let mut r = VerificationReport::new(format!("compatible operators on {}", label(pair)), seed);
    r.checks("T1/", relative_rb_report(&p, &t1)?);
    r.checks("T2/", relative_rb_report(&p, &t2)?);
    if !r.all_passed() {
        return Ok(r);
    }
    let identities = compatibility_identities(&p, &t1, &t2)?;
    r.checks("", identities);
    let mut samples = CheckReport::new();
    for (k1, k2) in COMPATIBILITY_SAMPLES {
        let comb = t1.scale(&Rational::from_int(k1)).add(&t2.scale(&Rational::from_int(k2)));
        samples.push(CheckResult::from_bool(
            format!("sample({k1},{k2})"),
            is_relative_rb(&p, &comb)?,
        ));
    }
    r.checks("", samples);
    match is_compatible_pair(&p, &t1, &t2) {
        Ok(true) => {
            if invert(&t2).is_ok() {
                match nijenhuis_from_pair(&p, &t1, &t2) {
                    Ok(n) => {
                        r.consequences("", single(CheckResult::pass("T1∘T2⁻¹-nijenhuis")));
                        r.value("N", operator_to_value(&n));
                    }
                    Err(e) => r.error("T1∘T2⁻¹-nijenhuis", &e, true),
                }
            }
        }
        Ok(false) => {}
        Err(e) => r.error("cross-check", &e, is_consequence_error(&e)),
    }
    Ok(r)
}

fn strong(pair: &Path, t: &Path, s: &Path, n: Option<&Path>, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let (t, s) = (load_operator(t)?, load_operator(s)?);
    let mut r = VerificationReport::new(format!("strong condition on {}", label(pair)), seed);
    let strong_ok = {
        let c = strong_condition_report(&p, &t, &s)?;
        let ok = c.passed;
        r.checks("", single(c));
        ok
    };
    if let Some(n) = n {
        let n = load_operator(n)?;
        let structure = rbn_report(&p, &t, &s, &n)?;
        let ok = structure.all_passed();
        r.checks("rbn/", structure);
        if ok && strong_ok {
            let ts = t.mul(&s);
            match is_compatible_pair(&p, &t, &ts) {
                Ok(c) => r.consequences("", single(CheckResult::from_bool("T-and-T∘S-compatible", c))),
                Err(e) => r.error("T-and-T∘S-compatible", &e, true),
            }
        }
    }
    Ok(r)
}

fn deform(pair: &Path, n: &Path, s: &Path, seed: u64) -> Result<VerificationReport, Error> {
    let p = load_pair(pair)?;
    let (n, s) = (load_operator(n)?, load_operator(s)?);
    let mut r = VerificationReport::new(
        format!("trivial deformation from a Nijenhuis structure on {}", label(pair)),
        seed,
    );
    let structure = nijenhuis_structure_report(&p, &n, &s)?;
    let ok = structure.checks.iter().filter(|c| c.name != "structure-D").all(|c| c.passed);
    r.checks("nijenhuis-structure/", structure);
    if !ok {
        return Ok(r);
    }
    let ns = NijenhuisStructure::new(&p, n, s)?;
    let d = ns.trivial_deformation();
    r.consequences("certificate/", ns.triviality_report()?);
    r.value("deformation", deformation_value(&d));
    Ok(r)
}

fn quadratic(action: &QuadraticCommand, seed: u64) -> Result<VerificationReport, Error> {
    match action {
        QuadraticCommand::CheckForm { algebra, b } => {
            let a = load_algebra(algebra)?;
            let b = load_operator(b)?;
            let mut r = VerificationReport::new(format!("invariant form on {}", label(algebra)), seed);
            let defining = invariant_form_report(&a, &b)?;
            let ok = defining.all_passed();
            r.checks("", defining);
            if ok {
                let qf = QuadraticForm::new(&a, b)?;
                match invariance_transport(&qf, TransportSide::All) {
                    Ok(t) => r.consequences("", t),
                    Err(e) => {
                        r.consequences("", qf.transport_report(TransportSide::All)?);
                        r.error("transport", &e, true);
                    }
                }
                r.value("B_sharp", operator_to_value(qf.b_sharp()));
            }
            Ok(r)
        }
        QuadraticCommand::RMatrix { algebra, pi } => {
            let a = load_algebra(algebra)?;
            let pi = load_operator(pi)?;
            let mut r = VerificationReport::new(format!("r-matrix on {}", label(algebra)), seed);
            r.checks("", r_matrix_report(&a, &pi)?);
            r.value("pi_sharp", operator_to_value(&pi_sharp(&pi)));
            Ok(r)
        }
        QuadraticCommand::DualNijenhuis { pair, n, s } => {
            let p = load_pair(pair)?;
            let (n, s) = (load_operator(n)?, load_operator(s)?);
            let mut r = VerificationReport::new(format!("dual Nijenhuis structure on {}", label(pair)), seed);
            r.checks("", dual_nijenhuis_report(&p, &n, &s)?);
            if let Err(e) = is_dual_nijenhuis(&p, &n, &s) {
                r.error("route-agreement", &e, is_consequence_error(&e));
            }
            Ok(r)
        }
        QuadraticCommand::RbnToRmn { algebra, b, r: rpath, n } => {
            let a = load_algebra(algebra)?;
            let (b, rm, n) = (load_operator(b)?, load_operator(rpath)?, load_operator(n)?);
            let mut r = VerificationReport::new(format!("Rota-Baxter-Nijenhuis to r-matrix-Nijenhuis on {}", label(algebra)), seed);
            let Some(qf) = form_or_report(&a, b, &mut r)? else { return Ok(r) };
            r.checks("precondition/", rb_nijenhuis_report(&a, &rm, &n)?);
            r.checks("precondition/", single(skew_endomorphism_report(&qf, &rm)?));
            r.checks("precondition/", single(form_compatibility(&qf, &n)?));
            if !r.all_passed() {
                return Ok(r);
            }
            match rbn_to_rmn(&qf, &rm, &n) {
                Ok(pi) => {
                    r.consequences("consequence/", rmatrix_nijenhuis_report(&a, pi.pi(), &n)?);
                    r.value("pi", operator_to_value(pi.pi()));
                    r.value("pi_sharp", operator_to_value(pi.pi_sharp()));
                }
                Err(e) => r.error("conversion", &e, true),
            }
            Ok(r)
        }
        QuadraticCommand::RmnToRbn { algebra, b, pi, n } => {
            let a = load_algebra(algebra)?;
            let (b, pi, n) = (load_operator(b)?, load_operator(pi)?, load_operator(n)?);
            let mut r = VerificationReport::new(format!("r-matrix-Nijenhuis to Rota-Baxter-Nijenhuis on {}", label(algebra)), seed);
            let Some(qf) = form_or_report(&a, b, &mut r)? else { return Ok(r) };
            r.checks("precondition/", rmatrix_nijenhuis_report(&a, &pi, &n)?);
            r.checks("precondition/", single(form_compatibility(&qf, &n)?));
            if !r.all_passed() {
                return Ok(r);
            }
            match rmn_to_rbn(&qf, &pi, &n) {
                Ok(rm) => {
                    r.consequences("consequence/", rb_nijenhuis_report(&a, &rm, &n)?);
                    r.consequences("consequence/", single(CheckResult::pass("round-trip")));
                    r.value("R", operator_to_value(&rm));
                }
                Err(e) => r.error("conversion", &e, true),
            }
            Ok(r)
        }
    }
}

fn form_or_report(
    a: &LieYamagutiAlgebra,
    b: Matrix,
    r: &mut VerificationReport,
) -> Result<Option<QuadraticForm>, Error> {
    let rep = invariant_form_report(a, &b)?;
    let ok = rep.all_passed();
    r.checks("form/", rep);
    Ok(if ok { Some(QuadraticForm::new(a, b)?) } else { None })
}

fn search(target: &SearchCommand, seed: u64) -> Result<VerificationReport, Error> {
    let verified = |ok: bool| single(CheckResult::from_bool("results-verified", ok));
    match target {
        SearchCommand::Rb { pair, values } => {
            let p = load_pair(pair)?;
            let found = search_relative_rb(&p, values);
            let mut r = VerificationReport::new(format!("relative Rota-Baxter search on {}", label(pair)), seed);
            let ok = found.iter().all(|t| relative_rb_report(&p, t).is_ok_and(|x| x.all_passed()));
            r.checks("", verified(ok));
            r.value("count", json!(found.len()));
            r.value("found", operators_value(&found));
            Ok(r)
        }
        SearchCommand::Nijenhuis { algebra, values } => {
            let a = load_algebra(algebra)?;
            let found = search_nijenhuis(&a, values);
            let mut r = VerificationReport::new(format!("Nijenhuis search on {}", label(algebra)), seed);
            let ok = found.iter().all(|n| a.nijenhuis_report(n).is_ok_and(|x| x.all_passed()));
            r.checks("", verified(ok));
            r.value("count", json!(found.len()));
            r.value("found", operators_value(&found));
            Ok(r)
        }
        SearchCommand::Compatible { pair, values } => {
            let p = load_pair(pair)?;
            let found = search_compatible_invertible(&p, values);
            let mut r = VerificationReport::new(format!("compatible pair search on {}", label(pair)), seed);
            let ok = found
                .iter()
                .all(|(a, b)| is_compatible_pair(&p, a, b).unwrap_or(false));
            r.checks("", verified(ok));
            r.value("count", json!(found.len()));
            r.value(
                "found",
                Value::Array(
                    found
                        .iter()
                        .map(|(a, b)| json!({"T1": operator_to_value(a), "T2": operator_to_value(b)}))
                        .collect(),
                ),
            );
            Ok(r)
        }
        SearchCommand::Forms { algebra, values } => {
            let a = load_algebra(algebra)?;
            let found = search_invariant_forms(&a, values);
            let mut r = VerificationReport::new(format!("invariant form search on {}", label(algebra)), seed);
            let ok = found.iter().all(|b| QuadraticForm::new(&a, b.clone()).is_ok());
            r.checks("", verified(ok));
            r.value("count", json!(found.len()));
            r.value("found", operators_value(&found));
            Ok(r)
        }
        SearchCommand::Quadratic {
            algebra,
            b,
            pi_values,
            n_values,
        } => {
            let a = load_algebra(algebra)?;
            let b = load_operator(b)?;
            let mut r = VerificationReport::new(format!("quadratic Rota-Baxter-Nijenhuis search on {}", label(algebra)), seed);
            let Some(qf) = form_or_report(&a, b, &mut r)? else { return Ok(r) };
            let instances = lieyam::quadratic::search_quadratic_rbn(&qf, pi_values, n_values);
            let mut ok = true;
            let mut out = Vec::new();
            for (rm, n) in &instances {
                match rbn_to_rmn(&qf, rm, n) {
                    Ok(pi) => {
                        ok &= rmn_to_rbn(&qf, pi.pi(), n).as_ref() == Ok(rm);
                        out.push(json!({
                            "R": operator_to_value(rm),
                            "N": operator_to_value(n),
                            "pi": operator_to_value(pi.pi()),
                        }));
                    }
                    Err(e) => {
                        r.error("conversion", &e, true);
                        ok = false;
                    }
                }
            }
            r.consequences("", verified(ok));
            r.value("count", json!(instances.len()));
            r.value("found", Value::Array(out));
            Ok(r)
        }
        SearchCommand::Random { count, max_dim } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut r = VerificationReport::new(format!("{count} random valid pairs"), seed);
            let mut names = Vec::new();
            let mut ok = true;
            for _ in 0..*count {
                let (name, p) = random_valid_pair(&mut rng, *max_dim);
                ok &= p.check().all_passed();
                names.push(json!({"name": name, "dim_g": p.dim_g(), "dim_v": p.dim_v()}));
            }
            r.checks("", verified(ok));
            r.value("pairs", Value::Array(names));
            Ok(r)
        }
    }
}

#[allow(dead_code)]
fn assert_pair_type(_: &LieYRepPair) {}
