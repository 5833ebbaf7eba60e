use super::diagram::{MotzkinPath, PathDiagram, Step};
use crate::error::{Error, Result};
use crate::family::{generate, FamilyId};
use crate::perm::{embrace, shape, signature_of, Permutation, Shape};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The even-odd descent bijection: the step of `j` records which of
/// `2j-1`, `2j` lie in the weak signature, and the labels are their
/// right-embracing counts.
pub fn phi(s: &Permutation) -> Result<PathDiagram> {
    let (sig, _) = signature_of(s)?;
    let e = embrace(s);
    let n = s.len() / 2;
    let mut steps = Vec::with_capacity(n);
    let (mut xi, mut xp) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for j in 1..=n {
        let (o, ev) = (2 * j - 1, 2 * j);
        steps.push(match (sig.contains(o), sig.contains(ev)) {
            (true, false) => Step::U,
            (false, true) => Step::D,
            (false, false) => Step::L1,
            (true, true) => Step::L2,
        });
        xi.push(e.r_vec[o]);
        xp.push(e.r_vec[ev]);
    }
    PathDiagram::new(MotzkinPath::new(steps)?, xi, xp)
}

/// Slot insertion: starting from one empty slot, each step fills slots
/// counted from the right with `2j-1` and `2j`; the last slot is dropped.
pub fn phi_inverse(d: &PathDiagram) -> Result<Permutation> {
    d.validate()?;
    // `None` marks a slot.
    let mut word: Vec<Option<u8>> = vec![None];
    for (j, &step) in d.steps().iter().enumerate() {
        let odd = (2 * j + 1) as u8;
        let even = odd + 1;
        let (a, b) = (d.xi[j] as usize, d.xi_prime[j] as usize);
        let (first, second_rank): (Vec<Option<u8>>, usize) = match step {
            Step::U => (vec![None, Some(odd), None], b + 1),
            Step::D => (vec![Some(odd), None], b + 2),
            Step::L1 => (vec![Some(odd), None], b + 1),
            Step::L2 => (vec![None, Some(odd), None], b + 2),
        };
        fill_slot(&mut word, a + 1, &first, d)?;
        let second = match step {
            Step::U | Step::L1 => vec![Some(even), None],
            Step::D | Step::L2 => vec![Some(even)],
        };
        fill_slot(&mut word, second_rank, &second, d)?;
    }
    match word.pop() {
        Some(None) if word.iter().all(Option::is_some) => {}
        _ => return Err(Error::InvalidDiagram(format!("{d} leaves stray slots"))),
    }
    Permutation::new(word.into_iter().flatten().collect())
}

/// Replaces the `rank`-th slot from the right by `with`.
fn fill_slot(word: &mut Vec<Option<u8>>, rank: usize, with: &[Option<u8>], d: &PathDiagram) -> Result<()> {
    let pos = word
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.is_none())
        .nth(rank - 1)
        .map(|(i, _)| i)
        .ok_or_else(|| Error::InvalidDiagram(format!("{d} addresses missing slot {rank}")))?;
    word.splice(pos..=pos, with.iter().copied());
    Ok(())
}

/// The odd-odd descent bijection: the step of `j` is the shape of
/// `2j-1` (valley, peak, double ascent, double descent) and the labels
/// are the left-embracing counts of `2j-1` and `2j`.
pub fn psi(s: &Permutation) -> Result<PathDiagram> {
    if !crate::family::is_member(FamilyId::Ystar, s)? {
        return Err(Error::NotMember {
            family: "Ystar".into(),
            word: s.to_string(),
        });
    }
    let sh = shape(s);
    let e = embrace(s);
    let n = s.len() / 2;
    let mut steps = Vec::with_capacity(n);
    let (mut xi, mut xp) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for j in 1..=n {
        steps.push(match sh.by_value[2 * j - 1] {
            Some(Shape::Valley) => Step::U,
            Some(Shape::Peak) => Step::D,
            Some(Shape::DoubleAscent) => Step::L1,
            _ => Step::L2,
        });
        xi.push(e.l_vec[2 * j - 1]);
        xp.push(e.l_vec[2 * j]);
    }
    PathDiagram::new(MotzkinPath::new(steps)?, xi, xp)
}

/// Inverse of [`psi`] for one length, built by tabulating the family.
#[derive(Debug)]
pub struct PsiTable {
    n: usize,
    map: HashMap<PathDiagram, Permutation>,
}

impl PsiTable {
    /// Fails if two members share a diagram.
    pub fn build(n: usize) -> Result<Self> {
        let mut map = HashMap::new();
        for s in generate(FamilyId::Ystar, n)? {
            let d = psi(&s)?;
            if let Some(prev) = map.insert(d.clone(), s.clone()) {
                return Err(Error::Reconstruction {
                    case: "psi".into(),
                    word: format!("{prev} and {s} share {d}"),
                    solutions: 2,
                });
            }
        }
        Ok(Self { n, map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, d: &PathDiagram) -> Option<&Permutation> {
        self.map.get(d)
    }
}

/// Shared, lazily built tables.
pub fn psi_table(n: usize) -> Result<Arc<PsiTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PsiTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("psi cache").get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(PsiTable::build(n)?);
    cache.lock().expect("psi cache").insert(n, t.clone());
    Ok(t)
}

pub fn psi_inverse(d: &PathDiagram) -> Result<Permutation> {
    d.validate()?;
    psi_table(d.len())?
        .get(d)
        .cloned()
        .ok_or_else(|| Error::InvalidDiagram(format!("{d} is not in the image")))
}
