use super::diagram::{PathDiagram, Step};
use crate::error::{Error, Result};
use crate::poly::{pq_bracket, pq_bracket1, pq_int, qp_bracket1, Coeff, Monomial, MultiPoly, VarId};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Per-step weight systems on path diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightScheme {
    /// Eight-variable weights carried by the even-odd descent bijection.
    Master,
    /// Five-variable weights carried by the odd-odd descent bijection.
    OddOdd,
}

impl WeightScheme {
    /// Name of the continued fraction this scheme sums to.
    pub fn catalog_name(self) -> &'static str {
        match self {
            WeightScheme::Master => "master",
            WeightScheme::OddOdd => "oddodd",
        }
    }

    /// Weight of one step starting at height `h` with labels `(xi, xp)`.
    pub fn step_weight<C: Coeff>(self, step: Step, h: u32, xi: u32, xp: u32) -> MultiPoly<C> {
        let ind = |b: bool| u32::from(b);
        use VarId::*;
        let pairs: Vec<(VarId, u32)> = match self {
            WeightScheme::Master => {
                // q carries what the labels leave of the height budget.
                let room = 2 * h + 1;
                match step {
                    Step::U => vec![
                        (A, ind(xp == h + 1)),
                        (BBar, ind(xp == 0)),
                        (B, ind(xi == 0)),
                        (P, xi + xp),
                        (Q, room - xi - xp),
                        (T, 1),
                    ],
                    Step::D => vec![
                        (A, ind(xp + 1 == h)),
                        (ABar, ind(xi == h)),
                        (B, ind(xi == 0)),
                        (P, xi + xp),
                        (Q, room - 2 - xi - xp),
                    ],
                    Step::L1 => vec![
                        (A, ind(xp == h)),
                        (ABar, ind(xi == h)),
                        (BBar, ind(xp == 0)),
                        (B, ind(xi == 0)),
                        (P, xi + xp),
                        (Q, room - 1 - xi - xp),
                    ],
                    Step::L2 => vec![
                        (A, ind(xp == h)),
                        (B, ind(xi == 0)),
                        (P, xi + xp),
                        (Q, room - 1 - xi - xp),
                        (T, 1),
                        (Y, 1),
                    ],
                }
            }
            WeightScheme::OddOdd => {
                let (bx, bxp) = step.label_bounds(h);
                let mut v = vec![(A, ind(xp == 0)), (Q, xi + xp), (P, bx - xi + bxp - xp)];
                match step {
                    Step::U => v.push((T, 1)),
                    Step::L2 => v.extend([(T, 1), (Y, 1)]),
                    _ => {}
                }
                v
            }
        };
        MultiPoly::term(C::one(), Monomial::from_pairs(pairs))
    }

    /// Product of the step weights of `d`.
    pub fn weight<C: Coeff>(self, d: &PathDiagram) -> MultiPoly<C> {
        let hs = d.path.heights();
        let mono = d.steps().iter().enumerate().fold(Monomial::one(), |acc, (j, &s)| {
            let w: MultiPoly<C> = self.step_weight(s, hs[j], d.xi[j], d.xi_prime[j]);
            acc.mul(&w.terms()[0].0)
        });
        MultiPoly::term(C::one(), mono)
    }

    /// Sum of the step weight over every legal label pair.
    pub fn step_sum<C: Coeff>(self, step: Step, h: u32) -> MultiPoly<C> {
        let (bx, bxp) = step.label_bounds(h);
        (0..=bx)
            .flat_map(|a| (0..=bxp).map(move |b| (a, b)))
            .map(|(a, b)| self.step_weight(step, h, a, b))
            .sum()
    }

    /// The bracket-product closed form of [`Self::step_sum`].
    pub fn step_sum_closed<C: Coeff>(self, step: Step, h: u32) -> Result<MultiPoly<C>> {
        if step == Step::D && h == 0 {
            return Err(Error::InvalidArgument("no fall from height 0".into()));
        }
        let v = |x: VarId| MultiPoly::<C>::var(x);
        let t = v(VarId::T);
        let ty = &t * &v(VarId::Y);
        use VarId::*;
        Ok(match self {
            WeightScheme::Master => match step {
                Step::U => &(&qp_bracket1(&v(B), h + 1)? * &pq_bracket(&v(A), h + 2, &v(BBar))?) * &t,
                Step::D => &pq_bracket(&v(ABar), h + 1, &v(B))? * &pq_bracket1(&v(A), h)?,
                Step::L1 => &pq_bracket(&v(ABar), h + 1, &v(B))? * &pq_bracket(&v(A), h + 1, &v(BBar))?,
                Step::L2 => &(&pq_bracket1(&v(A), h + 1)? * &qp_bracket1(&v(B), h + 1)?) * &ty,
            },
            WeightScheme::OddOdd => match step {
                Step::U => &(&pq_int(h + 1)? * &pq_bracket1(&v(A), h + 2)?) * &t,
                Step::D => &pq_int(h + 1)? * &pq_bracket1(&v(A), h)?,
                Step::L1 => &pq_int(h + 1)? * &pq_bracket1(&v(A), h + 1)?,
                Step::L2 => &(&pq_int(h + 1)? * &pq_bracket1(&v(A), h + 1)?) * &ty,
            },
        })
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.catalog_name())
    }
}

impl FromStr for WeightScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "master" => Ok(WeightScheme::Master),
            "oddodd" => Ok(WeightScheme::OddOdd),
            _ => Err(Error::InvalidArgument(format!("unknown weight scheme `{s}`"))),
        }
    }
}
