//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lieyam::{CheckReport, Witness};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub citation: String,
    /// Consequences are derived statements; their failure on valid input is
    /// an internal contradiction rather than an ordinary check failure.
    #[serde(skip)]
    pub consequence: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
    pub runtime_ms: u128,
    pub seed: u64,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, seed: u64) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            values: BTreeMap::new(),
            runtime_ms: 0,
            seed,
        }
    }

    fn add(&mut self, prefix: &str, r: CheckReport, consequence: bool) {
        for c in r.checks {
            let status = if c.passed { Status::Pass } else { Status::Fail };
            // A failed check always carries a witness, possibly empty for
            // global properties such as rank conditions.
            let witness = match (c.passed, c.witness) {
                (true, _) => None,
                (false, Some(w)) => Some(w),
                (false, None) => Some(Witness {
                    tuple: Vec::new(),
                    residual: Vec::new(),
                    t_order: None,
                }),
            };
            self.checks.push(Check {
                citation: citation(&c.name),
                name: format!("{prefix}{}", c.name),
                status,
                witness,
                message: None,
                consequence,
            });
        }
    }

    /// Adds defining checks.
    pub fn checks(&mut self, prefix: &str, r: CheckReport) {
        self.add(prefix, r, false);
    }

    /// Adds checks of derived consequences.
    pub fn consequences(&mut self, prefix: &str, r: CheckReport) {
        self.add(prefix, r, true);
    }

    /// Records an error raised while evaluating a check.
    pub fn error(&mut self, name: &str, err: &lieyam::Error, consequence: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Error,
            witness: None,
            message: Some(err.to_string()),
            citation: citation(name),
            consequence,
        });
    }

    pub fn value(&mut self, key: &str, v: Value) {
        self.values.insert(key.to_string(), v);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 0 when everything passes, 3 when a consequence fails or errors, 1
    /// otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else if self.checks.iter().any(|c| c.consequence && c.status != Status::Pass) {
            3
        } else {
            1
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string(self).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let _ = write!(out, "  [{tag}] {} — {}", c.name, c.citation);
            if let Some(w) = &c.witness {
                let _ = write!(out, "\n         at {:?}, residual [{}]", w.tuple, w.residual.join(", "));
                if let Some(k) = w.t_order.filter(|&k| k > 0) {
                    let _ = write!(out, " (lowest t-order {k})");
                }
            }
            if let Some(m) = &c.message {
                let _ = write!(out, "\n         {m}");
            }
            out.push('\n');
        }
        for (k, v) in &self.values {
            let _ = writeln!(out, "{k}: {v}");
        }
        let verdict = match self.exit_code() {
            0 => "PASS",
            3 => "CONSEQUENCE VIOLATED",
            _ => "FAIL",
        };
        let _ = writeln!(
            out,
            "result: {verdict} ({} checks, {} ms, seed {})",
            self.checks.len(),
            self.runtime_ms,
            self.seed
        );
        out
    }
}

/// A descriptive citation of the identity behind a check name.
pub fn citation(name: &str) -> String {
    let leaf = name.rsplit('/').next().unwrap_or(name);
    let text = match leaf {
        "LY1" => "Lie-Yamaguti axiom: [[x,y],z] + ⟪x,y,z⟫ + cyclic = 0",
        "LY2" => "Lie-Yamaguti axiom: ⟪[x,y],z,w⟫ + cyclic in (x,y,z) = 0",
        "LY3" => "Lie-Yamaguti axiom: ⟪x,y,[z,w]⟫ = [⟪x,y,z⟫,w] + [z,⟪x,y,w⟫]",
        "LY4" => "Lie-Yamaguti axiom: ⟪x,y,⟪z,w,u⟫⟫ = ⟪⟪x,y,z⟫,w,u⟫ + ⟪z,⟪x,y,w⟫,u⟫ + ⟪z,w,⟪x,y,u⟫⟫",
        "RLYb" => "representation condition: μ([x,y],z) = μ(x,z)ρ(y) − μ(y,z)ρ(x)",
        "RLYd" => "representation condition: μ(x,[y,z]) = ρ(y)μ(x,z) − ρ(z)μ(x,y)",
        "RLYe" => "representation condition: ρ(⟪x,y,z⟫) = [D(x,y),ρ(z)]",
        "RYT4" => "representation condition: μ(z,w)μ(x,y) − μ(y,w)μ(x,z) − μ(x,⟪y,z,w⟫) + D(y,z)μ(x,w) = 0",
        "RLY5" => "representation condition: μ(⟪x,y,z⟫,w) + μ(z,⟪x,y,w⟫) = [D(x,y),μ(z,w)]",
        "RLYc" => "implied identity: D([x,y],z) + cyclic = 0",
        "RLY5a" => "implied identity: D(⟪x,y,z⟫,w) + D(z,⟪x,y,w⟫) = [D(x,y),D(z,w)]",
        "RLY6" => "implied identity: μ(⟪x,y,z⟫,w) = μ(x,w)μ(z,y) − μ(y,w)μ(z,x) − μ(z,w)D(x,y)",
        "nijenhuis-binary" => "Nijenhuis operator: [Nx,Ny] = N([Nx,y] + [x,Ny] − N[x,y])",
        "nijenhuis-ternary" => "Nijenhuis operator: ⟪Nx,Ny,Nz⟫ = N⟪x,y,z⟫_N for the N-deformed ternary bracket",
        "structure-rho" => "Nijenhuis structure: ρ(Nx)S = S(ρ(Nx) + ρ(x)S − Sρ(x))",
        "structure-mu" => "Nijenhuis structure: μ(Nx,Ny)S = S·ϖ₂(x,y), second-order deformed μ",
        "structure-D" => "Nijenhuis structure consequence: D(Nx,Ny)S = S·D̂(x,y)",
        "hatD" => "derived operator of the hat representation equals its closed form",
        "rb-binary" => "relative Rota-Baxter: [Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u)",
        "rb-ternary" => "relative Rota-Baxter: ⟪Tu,Tv,Tw⟫ = T(D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v)",
        "star-commutator" => "pre-Lie-Yamaguti: u∗v − v∗u is the sub-adjacent binary bracket",
        "brace-ternary" => "pre-Lie-Yamaguti: brace products assemble the sub-adjacent ternary bracket",
        "ON1" => "Rota-Baxter-Nijenhuis compatibility: N∘T = T∘S",
        "ON2" => "Rota-Baxter-Nijenhuis compatibility: [u,v]^T_S = [u,v]^{N∘T}",
        "ON3" => "Rota-Baxter-Nijenhuis compatibility: ⟪u,v,w⟫^T_S = ⟪u,v,w⟫^{N∘T}",
        "strong" => "strong condition on (T, S) required for the compatible-pair construction",
        "compat-binary" => "compatible operators: mixed binary Rota-Baxter identity (k₁k₂ coefficient)",
        "compat-ternary-12" => "compatible operators: mixed ternary identity (k₁²k₂ coefficient)",
        "compat-ternary-21" => "compatible operators: mixed ternary identity (k₁k₂² coefficient)",
        "hom-binary" | "ee1" => "homomorphism of binary brackets: φ[x,y] = [φx,φy]'",
        "hom-ternary" | "ee2" => "homomorphism of ternary brackets: φ⟪x,y,z⟫ = ⟪φx,φy,φz⟫'",
        "homo1" | "eqv1" => "pair homomorphism: ψρ(x) = ρ'(φx)ψ",
        "homo2" | "eqv2" => "pair homomorphism: ψμ(x,y) = μ'(φx,φy)ψ",
        "homo3" | "eqv3" => "pair homomorphism: ψD(x,y) = D'(φx,φy)ψ",
        "derived-D-expansion" => "linear deformation: D_t expands as D + tD₁ + t²D₂",
        "invariance-binary" => "invariant form: B([x,y],z) = −B(y,[x,z])",
        "invariance-ternary" => "invariant form: B(⟪x,y,z⟫,w) = B(x,⟪w,z,y⟫)",
        "nondegenerate" => "invariant form is nondegenerate",
        "transport-ad" => "B♯ transport: B♯(ad*_x α) = ad_x B♯α",
        "transport-right" => "B♯ transport: −B♯(ℜ*(y,x)α) = ℜ(x,y)B♯α",
        "transport-left" => "B♯ transport: B♯(𝔏*(x,y)α) = 𝔏(x,y)B♯α",
        "form-compatible" => "compatibility of N with B: B♯∘N* = N∘B♯",
        "skew-endomorphism" => "skew-symmetric endomorphism: R∘B♯ is skew",
        "dual-rho" => "dual Nijenhuis structure on V: ρ(Nx)S = S(ρ(Nx) − ρ(x)S) + ρ(x)S²",
        "dual-mu" => "dual Nijenhuis structure on V: ternary condition transposed from the dual pair",
        "delta-squared" => "coboundary squares to zero",
        "direct-vs-lifted" => "direct coboundary formula agrees with the lifted semidirect coboundary",
        "S-nijenhuis-on-subadjacent" => "S is a Nijenhuis operator on the sub-adjacent algebra V^T",
        "s-equals-hat-binary" => "S-deformed binary bracket on V equals the one induced by the hat pair",
        "s-equals-hat-ternary" => "S-deformed ternary bracket on V equals the one induced by the hat pair",
        "T1∘T2⁻¹-nijenhuis" => "T₁∘T₂⁻¹ is a Nijenhuis operator for compatible T₁, T₂ with T₂ invertible",
        "T-and-T∘S-compatible" => "T and T∘S are compatible relative Rota-Baxter operators",
        "round-trip" => "conversion followed by its inverse returns the input",
        "results-verified" => "every search result re-verified by the defining predicate",
        _ => return format!("defining identity `{leaf}`"),
    };
    text.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieyam::CheckResult;

    fn one(c: CheckResult) -> CheckReport {
        CheckReport { checks: vec![c] }
    }

    #[test]
    fn exit_codes_separate_consequences_from_failures() {
        let mut r = VerificationReport::new("s", 0);
        r.checks("", one(CheckResult::pass("a")));
        assert_eq!(r.exit_code(), 0);
        r.checks("", one(CheckResult::fail("b", None)));
        assert_eq!(r.exit_code(), 1);
        r.consequences("", one(CheckResult::fail("c", None)));
        assert_eq!(r.exit_code(), 3);
        let mut e = VerificationReport::new("s", 0);
        e.error("conversion", &lieyam::Error::ConsequenceViolated("x".into()), true);
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn failures_always_carry_a_witness() {
        let mut r = VerificationReport::new("s", 7);
        r.checks("p/", one(CheckResult::fail("b", None)));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0]["name"], "p/b");
        assert!(v["checks"][0]["witness"].is_object());
        assert_eq!(v["seed"], 7);
    }

    #[test]
    fn every_name_gets_a_citation() {
        assert!(citation("consequence/deformed-V-axioms/LY1").starts_with("Lie-Yamaguti axiom"));
        assert!(!citation("unknown-name").is_empty());
    }
}
