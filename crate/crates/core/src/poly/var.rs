use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A polynomial variable.
///
/// The named symbols come first, in the fixed alphabet order that drives
/// canonical term ordering. The indexed families (`alpha_i`, `up_i`, ...)
/// stand for generic coefficients in symbolic identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    A,
    ABar,
    B,
    BBar,
    P,
    Q,
    Y,
    T,
    Z,
    X0,
    X1,
    Alpha,
    Beta,
    Gamma,
    AlphaBar,
    BetaBar,
    GammaBar,
    AlphaI(u16),
    Up(u16),
    Down(u16),
    Lev(u16),
    Lev2(u16),
}

const NAMED: [(VarId, &str); 17] = [
    (VarId::A, "a"),
    (VarId::ABar, "abar"),
    (VarId::B, "b"),
    (VarId::BBar, "bbar"),
    (VarId::P, "p"),
    (VarId::Q, "q"),
    (VarId::Y, "y"),
    (VarId::T, "t"),
    (VarId::Z, "z"),
    (VarId::X0, "x0"),
    (VarId::X1, "x1"),
    (VarId::Alpha, "alpha"),
    (VarId::Beta, "beta"),
    (VarId::Gamma, "gamma"),
    (VarId::AlphaBar, "alphabar"),
    (VarId::BetaBar, "betabar"),
    (VarId::GammaBar, "gammabar"),
];

impl VarId {
    /// The seventeen named symbols in alphabet order.
    pub fn named() -> impl Iterator<Item = VarId> {
        NAMED.iter().map(|(v, _)| *v)
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::AlphaI(i) => write!(f, "alpha_{i}"),
            VarId::Up(i) => write!(f, "up_{i}"),
            VarId::Down(i) => write!(f, "down_{i}"),
            VarId::Lev(i) => write!(f, "lev_{i}"),
            VarId::Lev2(i) => write!(f, "lev2_{i}"),
            named => {
                let name = NAMED.iter().find(|(v, _)| v == named).map(|(_, s)| *s);
                f.write_str(name.expect("named variable"))
            }
        }
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((_, v)) = NAMED.iter().map(|(v, n)| (*n, *v)).find(|(n, _)| *n == s) {
            return Ok(v);
        }
        let unknown = || Error::UnknownVariable(s.to_string());
        let (family, idx) = s.rsplit_once('_').ok_or_else(unknown)?;
        let idx: u16 = idx.parse().map_err(|_| unknown())?;
        match family {
            "alpha" => Ok(VarId::AlphaI(idx)),
            "up" => Ok(VarId::Up(idx)),
            "down" => Ok(VarId::Down(idx)),
            "lev" => Ok(VarId::Lev(idx)),
            "lev2" => Ok(VarId::Lev2(idx)),
            _ => Err(unknown()),
        }
    }
}

impl Serialize for VarId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VarId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
