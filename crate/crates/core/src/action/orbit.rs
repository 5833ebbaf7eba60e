use super::{fbar_phi, free_pairs, interhop, normalizer_phi};
use crate::error::Result;
use crate::family::{vop_pairs, StatMap};
use crate::perm::{signature_of, Permutation};
use crate::poly::{poly_from_histogram, Coeff, MultiPoly};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// The three actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    /// Inter-hopping over free pairs.
    Interhop,
    /// Signature-preserving involutions indexed by the signature.
    Normalizer,
    /// Valley/peak-preserving involutions indexed by VOP pairs.
    Fbar,
}

impl std::str::FromStr for Action {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interhop" => Ok(Action::Interhop),
            "normalizer" => Ok(Action::Normalizer),
            "fbar" => Ok(Action::Fbar),
            _ => Err(crate::Error::InvalidArgument(format!(
                "unknown action `{s}`; expected interhop, normalizer or fbar"
            ))),
        }
    }
}

impl Action {
    /// Generator indices applicable at `s`. They are the same throughout
    /// an orbit.
    pub fn generators(self, s: &Permutation) -> Result<Vec<usize>> {
        Ok(match self {
            Action::Interhop => free_pairs(s)?.into_iter().map(|p| p.r).collect(),
            Action::Normalizer => signature_of(s)?.0.set.into_iter().collect(),
            Action::Fbar => vop_pairs(s),
        })
    }

    pub fn apply(self, s: &Permutation, g: usize) -> Result<Permutation> {
        match self {
            Action::Interhop => interhop(s, g),
            Action::Normalizer => normalizer_phi(s, g),
            Action::Fbar => fbar_phi(s, g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub base: Permutation,
    pub members: BTreeSet<Permutation>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Breadth-first closure of `s` under the action.
pub fn orbit(s: &Permutation, action: Action) -> Result<Orbit> {
    let gens = action.generators(s)?;
    let mut members = BTreeSet::from([s.clone()]);
    let mut frontier = vec![s.clone()];
    while let Some(u) = frontier.pop() {
        for &g in &gens {
            let v = action.apply(&u, g)?;
            if members.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    Ok(Orbit {
        base: s.clone(),
        members,
    })
}

/// Partition of `set` into orbits, each based at its smallest member.
pub fn orbits_of(set: &[Permutation], action: Action) -> Result<Vec<Orbit>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut sorted = set.to_vec();
    sorted.sort();
    for s in sorted {
        if seen.contains(&s) {
            continue;
        }
        let o = orbit(&s, action)?;
        seen.extend(o.members.iter().cloned());
        out.push(o);
    }
    Ok(out)
}

/// Generating polynomial of the orbit's members.
pub fn orbit_sum<C: Coeff>(o: &Orbit, map: &StatMap) -> MultiPoly<C> {
    let mut hist = BTreeMap::new();
    for s in &o.members {
        *hist.entry(map.exponents(s)).or_insert(0u64) += 1;
    }
    poly_from_histogram(&map.vars(), &hist)
}
