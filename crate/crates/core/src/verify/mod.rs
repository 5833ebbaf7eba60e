//! Replays every identity by exhaustive enumeration and symbolic
//! comparison, one report per check.

mod checks;
mod probe;

use crate::error::{Error, Result};
use crate::family::Budget;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use probe::Probe;

macro_rules! check_ids {
    ($($var:ident => $name:literal, $n:expr, $order:expr, $stmt:literal;)*) => {
        /// One verifiable result.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($var,)* }

        impl CheckId {
            pub fn all() -> &'static [CheckId] {
                &[$(CheckId::$var,)*]
            }

            pub fn name(self) -> &'static str {
                match self { $(CheckId::$var => $name,)* }
            }

            /// Plain-language statement of what is verified.
            pub fn statement(self) -> &'static str {
                match self { $(CheckId::$var => $stmt,)* }
            }

            /// Default `(max_n, order)`.
            pub fn defaults(self) -> (Option<usize>, Option<usize>) {
                match self { $(CheckId::$var => ($n, $order),)* }
            }
        }
    };
}

check_ids! {
    SeidelFigure1 => "seidel-figure1", Some(6), None,
        "Seidel triangle yields the Genocchi, median Genocchi and normalized median Genocchi numbers";
    Thm11Counts => "thm1.1-counts", Some(4), None,
        "|D_2n| = |E_2n| = |X_2n| = H_{2n+1} and single-cycle D-permutations are counted by G_2n";
    Eq12Gamma => "eq1.2-gamma", Some(4), None,
        "sum over X_2n of y^dom t^des is gamma-expanded with gamma_k = |Xbar_{2n,k}|";
    Eq15Normalized => "eq1.5-normalized", Some(4), None,
        "4^k divides |Xbar_{2n,k}| and the quotients count normalized members and sum to h_n";
    Cf16 => "cf1.6", None, Some(6),
        "Genocchi S-fraction expands to G_{2n+2}";
    Cf17 => "cf1.7", None, Some(6),
        "median Genocchi S-fraction expands to H_{2n-1}";
    Cf19 => "cf1.9", None, Some(6),
        "median Genocchi J-fraction expands to H_{2n+1}";
    Cf110 => "cf1.10", None, Some(6),
        "normalized median Genocchi J-fraction expands to h_n";
    Lemma14Contract => "lemma1.4-contract", None, Some(7),
        "even and odd contractions of a generic S-fraction preserve its series";
    Thm21Master => "thm2.1-master", Some(3), None,
        "eight-variable generating function of X_2n equals the master J-fraction";
    Cor22 => "cor2.2", Some(3), None,
        "master J-fraction at b = bbar = 1";
    Cor23 => "cor2.3", Some(3), None,
        "S-fraction for a*abar*sum X_n(a,abar,1,1,p,q,1,t) x^{n+1}";
    Cor24 => "cor2.4", Some(4), None,
        "t^des z^lma over X_2n and t^drop z^cyc over E_2n share one J-fraction";
    Cor25 => "cor2.5", Some(4), None,
        "J-fraction for a^lema abar^loma p^ress q^les t^des over Xbar_2n";
    Thm26Cycles => "thm2.6-cycles", Some(4), None,
        "cycle counts are equidistributed on D_2n and E_2n";
    Thm27Gamma => "thm2.7-gamma", Some(4), None,
        "J-fraction and gamma expansion of X_n(a,1,b,1,p,q,y,t) with coefficients over Xbar";
    Lemma28Signature => "lemma2.8-signature", Some(4), None,
        "descent tops and bottoms form a weak signature whose function is l + r + 1";
    Prop210 => "prop2.10", Some(4), None,
        "normalized members with k descents have les >= k and ress >= k";
    Thm211Factorization => "thm2.11-factorization", Some(4), None,
        "(p+q)^{2k} divides gamma_{n,k}(p,q) with quotient summed over normalized members";
    Cor211P3 => "cor2.11-p3", Some(4), None,
        "J-fraction for normalized even-odd descent permutations";
    Lemma31Flajolet => "lemma3.1-flajolet", None, Some(4),
        "weighted path-diagram sums equal their J-fractions";
    Lemma32Bijection => "lemma3.2-bijection", Some(4), None,
        "path-diagram bijection is invertible and transfers dom, des, ress, les and the weights";
    Lemma33Indicators => "lemma3.3-indicators", Some(4), None,
        "parity maxima and minima are read off label indicators";
    Sec4PistolStats => "sec4-pistol-stats", Some(4), None,
        "surjective pistol statistics and counts";
    Lemma41Rz => "lemma4.1-rz", Some(4), None,
        "six-variable pistol polynomials equal their J-fraction";
    Eq42DpermCf => "eq4.2-dperm-cf", Some(3), None,
        "fixed-point and cycle J-fraction for D-permutations";
    Eq43Derangement => "eq4.3-derangement", Some(4), None,
        "cycle S-fraction for D-derangements";
    Sec5Orbits => "sec5-orbits", Some(4), None,
        "inter-hopping orbits each hold one domino-free member and sum to its gamma term";
    Sec6Orbits => "sec6-orbits", Some(4), None,
        "signature-preserving action on Xbar: worked examples, involutions, orbit sums";
    Thm72Specialization => "thm7.2-specialization", Some(4), None,
        "Y_n(a,p,q,y,t) = X_n(a,1,1,1,p,q,y,t) and its J-fraction";
    Thm74Gamma => "thm7.4-gamma", Some(4), None,
        "gamma expansion of Y_n with coefficients over Ybar";
    Thm7xFactorization => "thm7.x-factorization", Some(4), None,
        "(p+q)^{2k} factorization of the odd-odd gamma coefficients via the VOP action";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::all()
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub statement: String,
    pub max_n: Option<usize>,
    pub order: Option<usize>,
    pub status: Status,
    /// Matched values on success, the first counterexample otherwise.
    pub witness: String,
    pub wall_time_ms: u64,
}

/// Overrides for the per-check defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub max_n: Option<usize>,
    pub order: Option<usize>,
    pub budget: Budget,
}

/// What a single check sees.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub n: usize,
    pub order: usize,
    pub budget: Budget,
}

pub fn run(check: CheckId, params: &Params) -> VerificationReport {
    let (dn, dorder) = check.defaults();
    let max_n = dn.map(|d| params.max_n.unwrap_or(d));
    let order = dorder.map(|d| params.order.unwrap_or(d));
    let ctx = Ctx {
        n: max_n.unwrap_or(0),
        order: order.unwrap_or(0),
        budget: params.budget,
    };
    let start = Instant::now();
    let mut probe = Probe::default();
    let outcome = checks::dispatch(check, &ctx, &mut probe);
    let (status, witness) = match outcome {
        Ok(()) => probe.finish(),
        Err(e @ Error::BudgetExceeded { .. }) => (Status::Skipped, e.to_string()),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    VerificationReport {
        check,
        statement: check.statement().to_string(),
        max_n,
        order,
        status,
        witness,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs `checks` and returns the reports in the order given.
pub fn run_many(checks: &[CheckId], params: &Params, parallel: bool) -> Vec<VerificationReport> {
    if parallel {
        checks.par_iter().map(|&c| run(c, params)).collect()
    } else {
        checks.iter().map(|&c| run(c, params)).collect()
    }
}

pub fn run_all(params: &Params, parallel: bool) -> Vec<VerificationReport> {
    run_many(CheckId::all(), params, parallel)
}
