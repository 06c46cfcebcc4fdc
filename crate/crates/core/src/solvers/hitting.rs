//! Exact minimum hitting set by iterative deepening on the cardinality.

use super::{Budget, Meter, SolveError};

/// A minimum-cardinality set meeting every member of `sets`.
///
/// Tries sizes `0, 1, 2, ...`; each level branches on the elements of the
/// first set not yet hit, and an element rejected at one branch is
/// forbidden in the later sibling branches. Among minimum solutions the
/// first one in this branching order is returned, sorted. An empty member
/// makes the family unhittable; that case panics.
pub fn min_hitting_set(sets: &[Vec<usize>], budget: Budget) -> Result<Vec<usize>, SolveError> {
    min_hitting_set_metered(sets, &Meter::new(budget))
}

pub(crate) fn min_hitting_set_metered(sets: &[Vec<usize>], meter: &Meter) -> Result<Vec<usize>, SolveError> {
    assert!(sets.iter().all(|s| !s.is_empty()), "empty set cannot be hit");
    let universe = sets.iter().flatten().copied().max().map_or(0, |m| m + 1);
    let mut chosen = Vec::new();
    let mut forbidden = vec![false; universe];
    let mut hit = vec![0u32; sets.len()];
    let members: Vec<Vec<usize>> = {
        let mut m = vec![Vec::new(); universe];
        for (i, s) in sets.iter().enumerate() {
            for &x in s {
                m[x].push(i);
            }
        }
        m
    };
    for k in 0.. {
        let mut st = State { sets, members: &members, chosen: &mut chosen, forbidden: &mut forbidden, hit: &mut hit, meter };
        if st.search(k)? {
            let mut w = chosen;
            w.sort_unstable();
            return Ok(w);
        }
    }
    unreachable!()
}

struct State<'a> {
    sets: &'a [Vec<usize>],
    members: &'a [Vec<usize>],
    chosen: &'a mut Vec<usize>,
    forbidden: &'a mut Vec<bool>,
    hit: &'a mut Vec<u32>,
    meter: &'a Meter,
}

impl State<'_> {
    fn search(&mut self, left: usize) -> Result<bool, SolveError> {
        if !self.meter.tick() {
            return Err(self.meter.exceeded(None));
        }
        let Some(open) = (0..self.sets.len()).find(|&i| self.hit[i] == 0) else {
            return Ok(true);
        };
        if left == 0 {
            return Ok(false);
        }
        let cands: Vec<usize> = self.sets[open].iter().copied().filter(|&x| !self.forbidden[x]).collect();
        let mut banned = Vec::new();
        let mut found = false;
        for x in cands {
            self.chosen.push(x);
            for &i in &self.members[x] {
                self.hit[i] += 1;
            }
            found = self.search(left - 1)?;
            if found {
                break;
            }
            for &i in &self.members[x] {
                self.hit[i] -= 1;
            }
            self.chosen.pop();
            self.forbidden[x] = true;
            banned.push(x);
        }
        for x in banned {
            self.forbidden[x] = false;
        }
        Ok(found)
    }
}
