use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A step of a 2-Motzkin path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
    L1,
    L2,
}

impl Step {
    pub fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::L1 | Step::L2 => 0,
        }
    }

    /// Largest legal `(xi, xi')` at start height `h`.
    pub fn label_bounds(self, h: u32) -> (u32, u32) {
        match self {
            Step::U => (h, h + 1),
            Step::D => (h, h - 1),
            Step::L1 | Step::L2 => (h, h),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A path from height 0 to height 0 that never goes below 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i32 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::InvalidDiagram(format!("step {} goes below zero", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidDiagram(format!("path ends at height {h}")));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `w_0 = 0, w_1, ..., w_n = 0`.
    pub fn heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h: i32 = 0;
        out.push(0);
        for s in &self.steps {
            h += s.delta();
            out.push(h as u32);
        }
        out
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;
    /// Parses step strings like `UUL1DUDL2D`.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut it = s.chars().filter(|c| !c.is_whitespace() && *c != ',').peekable();
        while let Some(c) = it.next() {
            let step = match c {
                'U' => Step::U,
                'D' => Step::D,
                'L' => match it.next() {
                    Some('1') => Step::L1,
                    Some('2') => Step::L2,
                    _ => return Err(Error::Parse(format!("level step in `{s}` needs 1 or 2"))),
                },
                _ => return Err(Error::Parse(format!("unexpected `{c}` in path `{s}`"))),
            };
            steps.push(step);
        }
        Self::new(steps)
    }
}

/// A 2-Motzkin path with a label pair `(xi_j, xi'_j)` on each step,
/// bounded by the step's start height.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathDiagram {
    pub path: MotzkinPath,
    pub xi: Vec<u32>,
    pub xi_prime: Vec<u32>,
}

impl PathDiagram {
    pub fn new(path: MotzkinPath, xi: Vec<u32>, xi_prime: Vec<u32>) -> Result<Self> {
        let d = Self { path, xi, xi_prime };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.path.len();
        if self.xi.len() != n || self.xi_prime.len() != n {
            return Err(Error::InvalidDiagram("label count differs from path length".into()));
        }
        let hs = self.path.heights();
        for j in 0..n {
            let (bx, bxp) = self.path.steps()[j].label_bounds(hs[j]);
            if self.xi[j] > bx || self.xi_prime[j] > bxp {
                return Err(Error::InvalidDiagram(format!(
                    "labels ({}, {}) at step {} exceed ({bx}, {bxp})",
                    self.xi[j],
                    self.xi_prime[j],
                    j + 1
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        self.path.steps()
    }

    /// Parses a step string and a label list such as `(0,1)(0,2)`.
    pub fn parse(steps: &str, labels: &str) -> Result<Self> {
        let path: MotzkinPath = steps.parse()?;
        let nums: Vec<u32> = labels
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad label `{t}`"))))
            .collect::<Result<_>>()?;
        if nums.len() != 2 * path.len() {
            return Err(Error::Parse(format!(
                "expected {} labels, found {}",
                2 * path.len(),
                nums.len()
            )));
        }
        let xi = nums.iter().step_by(2).copied().collect();
        let xi_prime = nums.iter().skip(1).step_by(2).copied().collect();
        Self::new(path, xi, xi_prime)
    }

    pub fn labels_string(&self) -> String {
        self.xi
            .iter()
            .zip(&self.xi_prime)
            .map(|(a, b)| format!("({a},{b})"))
            .collect()
    }
}

impl fmt::Display for PathDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.path, self.labels_string())
    }
}

/// All path diagrams of length `n`, in depth-first order.
pub fn enumerate_diagrams(n: usize) -> Vec<PathDiagram> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    let mut xi = Vec::with_capacity(n);
    let mut xp = Vec::with_capacity(n);
    rec(n, 0, &mut steps, &mut xi, &mut xp, &mut out);
    out
}

fn rec(
    n: usize,
    h: u32,
    steps: &mut Vec<Step>,
    xi: &mut Vec<u32>,
    xp: &mut Vec<u32>,
    out: &mut Vec<PathDiagram>,
) {
    let left = n - steps.len();
    if left == 0 {
        if h == 0 {
            out.push(PathDiagram {
                path: MotzkinPath { steps: steps.clone() },
                xi: xi.clone(),
                xi_prime: xp.clone(),
            });
        }
        return;
    }
    if h as usize > left {
        return;
    }
    for step in [Step::U, Step::D, Step::L1, Step::L2] {
        if step == Step::D && h == 0 {
            continue;
        }
        let (bx, bxp) = step.label_bounds(h);
        let nh = (h as i32 + step.delta()) as u32;
        for a in 0..=bx {
            for b in 0..=bxp {
                steps.push(step);
                xi.push(a);
                xp.push(b);
                rec(n, nh, steps, xi, xp, out);
                steps.pop();
                xi.pop();
                xp.pop();
            }
        }
    }
}

/// All 2-Motzkin paths of length `n` (no labels).
pub fn enumerate_paths(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: u32, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(MotzkinPath { steps: cur.clone() });
            }
            return;
        }
        if h as usize > left {
            return;
        }
        for step in [Step::U, Step::D, Step::L1, Step::L2] {
            if step == Step::D && h == 0 {
                continue;
            }
            cur.push(step);
            go(n, (h as i32 + step.delta()) as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}
