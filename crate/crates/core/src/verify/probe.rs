use super::Status;
use crate::poly::{Coeff, MultiPoly, PowerSeries};
use std::fmt::{Debug, Display};

const CLIP: usize = 240;

fn clip(s: String) -> String {
    if s.chars().count() <= CLIP {
        s
    } else {
        let head: String = s.chars().take(CLIP).collect();
        format!("{head}...")
    }
}

/// Accumulates sub-check outcomes into a witness.
#[derive(Debug, Default)]
pub struct Probe {
    failures: Vec<String>,
    lines: Vec<String>,
    notes: Vec<String>,
}

impl Probe {
    pub fn check(&mut self, label: impl Display, pass: bool, detail: impl Display) {
        let line = clip(format!("{label}: {detail}"));
        if pass {
            self.lines.push(line);
        } else {
            self.failures.push(line);
        }
    }

    pub fn eq<T: PartialEq + Debug>(&mut self, label: impl Display, got: T, want: T) {
        if got == want {
            self.check(label, true, format!("{got:?}"));
        } else {
            self.check(label, false, format!("got {got:?}, expected {want:?}"));
        }
    }

    pub fn poly<C: Coeff>(&mut self, label: impl Display, lhs: &MultiPoly<C>, rhs: &MultiPoly<C>) {
        if lhs == rhs {
            self.check(label, true, format!("equal ({} terms)", lhs.len()));
        } else {
            self.check(label, false, format!("{lhs} != {rhs}"));
        }
    }

    pub fn series<C: Coeff>(&mut self, label: impl Display, lhs: &PowerSeries<C>, rhs: &PowerSeries<C>) {
        let order = lhs.order().min(rhs.order());
        match lhs.truncate(order).first_difference(&rhs.truncate(order)) {
            None => self.check(label, true, format!("equal through x^{order}")),
            Some(k) => self.check(
                label,
                false,
                format!("differ at x^{k}: {} vs {}", lhs.coeff(k), rhs.coeff(k)),
            ),
        }
    }

    /// Records an observation that does not affect the status.
    pub fn note(&mut self, s: impl Display) {
        self.notes.push(clip(format!("note: {s}")));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failures come first so the witness leads with a counterexample.
    pub(super) fn finish(self) -> (Status, String) {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut out: Vec<String> = self.failures.into_iter().map(|l| format!("FAILED {l}")).collect();
        out.extend(self.lines);
        out.extend(self.notes);
        (status, out.join("\n"))
    }
}
