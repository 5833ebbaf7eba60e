use super::coeff::Coeff;
use super::monomial::Monomial;
use super::var::VarId;
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept sorted in [`Monomial`] display order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_i64(n).expect("small integer fits the coefficient type"))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Sums arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in it {
            accumulate(&mut acc, m, c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> C {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::zero(),
        }
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(k, _)| k.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|(m, _)| m.vars()).collect()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: VarId, k: u32) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.split_off(v);
            (e == k).then(|| (rest, c.clone()))
        }))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d.clone() * c.clone()))
                .filter(|(_, d)| !d.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // Multiplying by a monomial can reorder terms across degrees only
        // uniformly, but the lex tiebreak may change, so re-sort.
        let mut terms: Vec<_> = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Self { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Substitutes `v := value`.
    pub fn subs(&self, v: VarId, value: &Self) -> Self {
        self.subs_many(&[(v, value.clone())])
    }

    /// Simultaneous substitution of several variables.
    pub fn subs_many(&self, assign: &[(VarId, Self)]) -> Self {
        let mut powers: HashMap<(VarId, u32), Self> = HashMap::new();
        let mut out: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in &self.terms {
            let mut factor = Self::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match assign.iter().find(|(w, _)| *w == v) {
                    Some((_, val)) => {
                        let p = powers.entry((v, e)).or_insert_with(|| val.pow(e));
                        factor = &factor * p;
                    }
                    None => kept.push((v, e)),
                }
            }
            let kept = Monomial::from_pairs(kept);
            for (fm, fc) in factor.terms {
                accumulate(&mut out, fm.mul(&kept), fc);
            }
        }
        Self::from_map(out)
    }

    /// Sets every listed variable to 1.
    pub fn set_one(&self, vars: &[VarId]) -> Self {
        let assign: Vec<_> = vars.iter().map(|&v| (v, Self::one())).collect();
        self.subs_many(&assign)
    }

    /// Keeps only the listed variables, setting all others to 1.
    pub fn keep_only(&self, vars: &[VarId]) -> Self {
        let drop: Vec<VarId> = self.variables().into_iter().filter(|v| !vars.contains(v)).collect();
        self.set_one(&drop)
    }

    /// Evaluates at integer points for every variable present.
    pub fn eval(&self, point: &[(VarId, C)]) -> Result<C> {
        let assign: Vec<_> = point.iter().map(|(v, c)| (*v, Self::constant(c.clone()))).collect();
        let r = self.subs_many(&assign);
        r.as_constant()
            .ok_or_else(|| Error::InvalidArgument(format!("unassigned variables in {r}")))
    }

    fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.iter().max_by(|a, b| a.0.grlex_cmp(&b.0))
    }

    /// Exact quotient `self / d`, by long division on grlex leading terms.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (lm, lc) = d
            .leading()
            .cloned()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot: HashMap<Monomial, C> = HashMap::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let inexact = || Error::InexactDivision(format!("{self} by {d}"));
            let qm = rm.div(&lm).ok_or_else(inexact)?;
            let qc = rc.div_exact(&lc).ok_or_else(inexact)?;
            let step = Self::term(qc.clone(), qm.clone());
            rem = &rem - &(&step * d);
            accumulate(&mut quot, qm, qc);
        }
        Ok(Self::from_map(quot))
    }

    /// Converts coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

fn accumulate<C: Coeff>(acc: &mut HashMap<Monomial, C>, m: Monomial, c: C) {
    match acc.get_mut(&m) {
        Some(old) => *old = old.clone() + c,
        None => {
            acc.insert(m, c);
        }
    }
}

fn merge<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>, negate_b: bool) -> MultiPoly<C> {
    let (x, y) = (&a.terms, &b.terms);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &C| if negate_b { -c.clone() } else { c.clone() };
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((y[j].0.clone(), fix(&y[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = x[i].1.clone() + fix(&y[j].1);
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(x[i..].iter().cloned());
    out.extend(y[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    MultiPoly { terms: out }
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        merge(self, rhs, false)
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        merge(self, rhs, true)
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return rhs.scale(&self.terms[0].1);
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0.is_one() {
            return self.scale(&rhs.terms[0].1);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                accumulate(&mut acc, ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        MultiPoly::from_map(acc)
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coeff> $tr for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $f(self, rhs: Self) -> MultiPoly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $f(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                (&self).$f(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        *self = &*self + rhs;
    }
}

impl<C: Coeff> SubAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &MultiPoly<C>) {
        *self = &*self - rhs;
    }
}

impl<C: Coeff> std::iter::Sum for MultiPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for p in iter {
            for (m, c) in p.terms {
                accumulate(&mut acc, m, c);
            }
        }
        Self::from_map(acc)
    }
}

impl<C: Coeff> std::iter::Product for MultiPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

impl<C: Coeff> From<VarId> for MultiPoly<C> {
    fn from(v: VarId) -> Self {
        Self::var(v)
    }
}

/// Canonical text: terms in display order, `*` products, `^` powers,
/// unit coefficients omitted, e.g. `1 + 6*t + t^2`.
impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for MultiPoly<C> {
    type Err = Error;

    /// Parses sums of products of integers and `var` / `var^k` factors.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (body, tail) = rest.split_at(end);
            terms.push(parse_term::<C>(body, sign)?);
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -1 } else { 1 };
            rest = &tail[1..];
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term<C: Coeff>(body: &str, sign: i32) -> Result<(Monomial, C)> {
    if body.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = C::one();
    let mut pairs = Vec::new();
    for factor in body.split('*') {
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let c: C = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
            coeff = coeff * c;
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            pairs.push((name.parse::<VarId>()?, exp));
        }
    }
    if sign < 0 {
        coeff = -coeff;
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: Monomial,
    coeff: String,
}

impl<C: Coeff> Serialize for MultiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                monomial: m.clone(),
                coeff: c.to_string(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for MultiPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        let mut terms = Vec::with_capacity(v.len());
        for t in v {
            let c: C = t
                .coeff
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((t.monomial, c));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Exponent-keyed histogram helper used by the enumerators: each key is an
/// exponent vector aligned with `vars`.
pub fn poly_from_histogram<C: Coeff>(vars: &[VarId], hist: &BTreeMap<Vec<u32>, u64>) -> MultiPoly<C> {
    MultiPoly::from_terms(hist.iter().map(|(exps, &count)| {
        let m = Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied()));
        (m, C::from_count(count))
    }))
}
