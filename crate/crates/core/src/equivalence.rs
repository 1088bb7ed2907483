//! Exact search for an equivariant isomorphism between two global actions on
//! blocks, where each block may carry an automorphism twist.
//!
//! A candidate isomorphism sends block `p` to `σ(p)` with twist `c_p`. It
//! commutes with the actions iff for every `g` and `p`
//!
//! ```text
//! σ(πa_g(p)) = πb_g(σ(p))      c_{πa_g(p)} = tb_{g,σ(p)} · c_p · ta_{g,p}⁻¹
//! ```
//!
//! Fixing one block forces its whole orbit, so the search propagates those
//! constraints and only branches on blocks not yet reached.

use crate::group::FiniteGroup;

#[derive(Clone, Debug)]
pub(crate) struct TwistedAction {
    pub classes: Vec<String>,
    pub auts: Vec<FiniteGroup>,
    /// `perm[g][p]`: block that `β_g` sends `p` to.
    pub perm: Vec<Vec<usize>>,
    /// `twist[g][p]`: automorphism `β_g` applies to the payload of block `p`.
    pub twist: Vec<Vec<usize>>,
}

impl TwistedAction {
    fn len(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Clone)]
struct State {
    sigma: Vec<Option<usize>>,
    twist: Vec<usize>,
    used: Vec<bool>,
}

struct Search<'a> {
    a: &'a TwistedAction,
    b: &'a TwistedAction,
}

impl Search<'_> {
    fn compatible(&self, p: usize, q: usize) -> bool {
        self.a.classes[p] == self.b.classes[q] && self.a.auts[p] == self.b.auts[q]
    }

    fn assign(&self, state: &mut State, p: usize, q: usize, c: usize) -> bool {
        match state.sigma[p] {
            Some(prev) => prev == q && state.twist[p] == c,
            None => {
                if state.used[q] || !self.compatible(p, q) {
                    return false;
                }
                state.sigma[p] = Some(q);
                state.twist[p] = c;
                state.used[q] = true;
                self.propagate(state, p)
            }
        }
    }

    fn propagate(&self, state: &mut State, start: usize) -> bool {
        let mut queue = vec![start];
        while let Some(p) = queue.pop() {
            let q = state.sigma[p].expect("queued blocks are assigned");
            let aut = &self.a.auts[p];
            for g in 0..self.a.perm.len() {
                let p2 = self.a.perm[g][p];
                let q2 = self.b.perm[g][q];
                let c2 = aut.mul(
                    aut.mul(self.b.twist[g][q], state.twist[p]),
                    aut.inv(self.a.twist[g][p]),
                );
                match state.sigma[p2] {
                    Some(prev) => {
                        if prev != q2 || state.twist[p2] != c2 {
                            return false;
                        }
                    }
                    None => {
                        if state.used[q2] || !self.compatible(p2, q2) {
                            return false;
                        }
                        state.sigma[p2] = Some(q2);
                        state.twist[p2] = c2;
                        state.used[q2] = true;
                        queue.push(p2);
                    }
                }
            }
        }
        true
    }

    fn solve(&self, state: State) -> Option<State> {
        let Some(p) = state.sigma.iter().position(Option::is_none) else {
            return Some(state);
        };
        for q in 0..self.b.len() {
            if state.used[q] || !self.compatible(p, q) {
                continue;
            }
            for c in self.a.auts[p].elements() {
                let mut next = state.clone();
                if self.assign(&mut next, p, q, c) {
                    if let Some(done) = self.solve(next) {
                        return Some(done);
                    }
                }
            }
        }
        None
    }
}

/// Finds `(σ(p), c_p)` for every block of `a`, respecting the `fixed`
/// assignments `(p, σ(p), c_p)`, or `None` when no equivariant isomorphism
/// exists.
pub(crate) fn find_equivariant_iso(
    a: &TwistedAction,
    b: &TwistedAction,
    fixed: &[(usize, usize, usize)],
) -> Option<Vec<(usize, usize)>> {
    if a.len() != b.len() || a.perm.len() != b.perm.len() {
        return None;
    }
    let search = Search { a, b };
    let mut state = State {
        sigma: vec![None; a.len()],
        twist: vec![0; a.len()],
        used: vec![false; b.len()],
    };
    for &(p, q, c) in fixed {
        if p >= a.len() || q >= b.len() || !search.assign(&mut state, p, q, c) {
            return None;
        }
    }
    let done = search.solve(state)?;
    Some(
        done.sigma
            .into_iter()
            .zip(done.twist)
            .map(|(q, c)| (q.unwrap(), c))
            .collect(),
    )
}
