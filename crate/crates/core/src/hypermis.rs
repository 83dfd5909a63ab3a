//! Branch and bound for maximum triple-free vertex sets.
//!
//! Input is a family of forbidden 3-subsets over `0..n`. The solver finds a
//! largest set containing no forbidden triple entirely, i.e. a maximum
//! independent set of a 3-uniform hypergraph. Unit propagation keeps the
//! invariant that no constraint ever has all three members included: as soon
//! as two members of a live constraint are in, the third is forced out.
//!
//! Two search modes share the state machinery:
//!   * a value phase branching on the vertex hit by the most live
//!     constraints, pruning with incumbent plus a greedy packing bound, and
//!   * a witness phase that re-runs the search in ascending vertex order at
//!     the proven optimum and stops at the first hit, which is therefore the
//!     lexicographically least optimal set.

pub(crate) type Triple = [u16; 3];

#[derive(Clone, Debug)]
pub(crate) struct MisResult {
    pub value: usize,
    /// Sorted members; lexicographically least optimum iff requested.
    pub witness: Vec<usize>,
    pub nodes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum VState {
    Undecided,
    In,
    Out,
}

enum Op {
    In(u16),
    Out(u16),
    Bump(u32),
    Kill(u32),
}

/// Monotone validity filter: a set that passes must keep passing when grown.
pub(crate) type Filter<'a> = &'a dyn Fn(&[usize]) -> bool;

pub(crate) struct MisOptions<'a> {
    pub filter: Option<Filter<'a>>,
    /// Re-run a first-hit pass at the optimum to canonicalize the witness.
    /// Not compatible with `filter`.
    pub lex_witness: bool,
}

struct Search<'a> {
    n: usize,
    triples: &'a [Triple],
    vtriples: Vec<Vec<u32>>,
    state: Vec<VState>,
    in_count: Vec<u8>,
    dead: Vec<bool>,
    alive_at: Vec<u32>,
    alive_total: usize,
    undecided: usize,
    in_stack: Vec<u16>,
    trail: Vec<Op>,
    nodes: u64,
    pack_mark: Vec<u32>,
    pack_epoch: u32,
    filter: Option<Filter<'a>>,
}

pub(crate) fn max_triple_free_set(
    n: usize,
    triples: &[Triple],
    seeds: &[Vec<usize>],
    options: MisOptions<'_>,
) -> MisResult {
    assert!(
        !(options.lex_witness && options.filter.is_some()),
        "lex witness pass does not support filters"
    );
    let mut vtriples = vec![Vec::new(); n];
    for (idx, t) in triples.iter().enumerate() {
        debug_assert!(t[0] < t[1] && t[1] < t[2] && (t[2] as usize) < n);
        for &m in t {
            vtriples[m as usize].push(idx as u32);
        }
    }
    let mut search = Search {
        n,
        triples,
        vtriples,
        state: vec![VState::Undecided; n],
        in_count: vec![0; triples.len()],
        dead: vec![false; triples.len()],
        alive_at: vec![0u32; n],
        alive_total: triples.len(),
        undecided: n,
        in_stack: Vec::with_capacity(n),
        trail: Vec::new(),
        nodes: 0,
        pack_mark: vec![0; n],
        pack_epoch: 0,
        filter: options.filter,
    };
    for v in 0..n {
        search.alive_at[v] = search.vtriples[v].len() as u32;
    }

    let mut best = 0usize;
    let mut best_set: Vec<usize> = Vec::new();
    for s in seeds {
        debug_assert!(search.valid_set(s));
        if s.len() > best {
            best = s.len();
            best_set = s.clone();
        }
    }

    search.optimize(&mut best, &mut best_set);
    debug_assert!(search.trail.is_empty());

    let witness = if options.lex_witness && best > 0 {
        let mut found = None;
        search.find_lex(best, &mut found);
        found.expect("a set of the proven optimal size exists")
    } else {
        best_set.sort_unstable();
        best_set
    };

    MisResult {
        value: best,
        witness,
        nodes: search.nodes,
    }
}

impl Search<'_> {
    fn include(&mut self, v: u16) {
        self.trail.push(Op::In(v));
        self.state[v as usize] = VState::In;
        self.in_stack.push(v);
        self.undecided -= 1;
        for idx in 0..self.vtriples[v as usize].len() {
            let t = self.vtriples[v as usize][idx];
            if self.dead[t as usize] {
                continue;
            }
            self.in_count[t as usize] += 1;
            self.trail.push(Op::Bump(t));
            if self.in_count[t as usize] == 2 {
                // The remaining member must be undecided: a live constraint
                // has no out member, and three in would need a second-in
                // transition that already forced it out.
                let third = self.triples[t as usize]
                    .iter()
                    .copied()
                    .find(|&m| self.state[m as usize] == VState::Undecided)
                    .expect("live constraint with two in-members has an undecided third");
                self.exclude(third);
            }
        }
    }

    fn exclude(&mut self, v: u16) {
        self.trail.push(Op::Out(v));
        self.state[v as usize] = VState::Out;
        self.undecided -= 1;
        for idx in 0..self.vtriples[v as usize].len() {
            let t = self.vtriples[v as usize][idx];
            if !self.dead[t as usize] {
                self.dead[t as usize] = true;
                self.trail.push(Op::Kill(t));
                self.alive_total -= 1;
                for &m in &self.triples[t as usize] {
                    self.alive_at[m as usize] -= 1;
                }
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Op::In(v) => {
                    self.state[v as usize] = VState::Undecided;
                    self.in_stack.pop();
                    self.undecided += 1;
                }
                Op::Out(v) => {
                    self.state[v as usize] = VState::Undecided;
                    self.undecided += 1;
                }
                Op::Bump(t) => self.in_count[t as usize] -= 1,
                Op::Kill(t) => {
                    self.dead[t as usize] = false;
                    self.alive_total += 1;
                    for &m in &self.triples[t as usize] {
                        self.alive_at[m as usize] += 1;
                    }
                }
            }
        }
    }

    fn candidate_with_all_undecided(&self) -> Vec<usize> {
        let mut cand: Vec<usize> = self.in_stack.iter().map(|&v| v as usize).collect();
        cand.extend((0..self.n).filter(|&v| self.state[v] == VState::Undecided));
        cand.sort_unstable();
        cand
    }

    fn passes_filter(&self, cand: &[usize]) -> bool {
        self.filter.is_none_or(|f| f(cand))
    }

    fn valid_set(&self, s: &[usize]) -> bool {
        self.triples.iter().all(|t| {
            !(s.contains(&(t[0] as usize))
                && s.contains(&(t[1] as usize))
                && s.contains(&(t[2] as usize)))
        }) && self.passes_filter(s)
    }

    /// Greedy packing of vertex-disjoint live constraints fully inside the
    /// undecided pool. Each packed constraint forces at least one exclusion,
    /// so `need` packed constraints certify potential − need as an upper
    /// bound. Returns whether the packing reached `need`.
    fn pack_reaches(&mut self, need: usize) -> bool {
        if need > self.undecided / 2 {
            // A packed constraint consumes at least two undecided vertices.
            return false;
        }
        self.pack_epoch += 1;
        let epoch = self.pack_epoch;
        let mut packed = 0usize;
        // Constraints with one member already in bind two undecided
        // vertices; pack those first, they are tighter per vertex.
        for pass in 0..2u8 {
            for (idx, t) in self.triples.iter().enumerate() {
                if self.dead[idx] {
                    continue;
                }
                let want_in = if pass == 0 { 1 } else { 0 };
                if self.in_count[idx] != want_in {
                    continue;
                }
                let free: Vec<u16> = t
                    .iter()
                    .copied()
                    .filter(|&m| self.state[m as usize] == VState::Undecided)
                    .collect();
                if free.len() != 3 - want_in as usize {
                    continue;
                }
                if free.iter().any(|&m| self.pack_mark[m as usize] == epoch) {
                    continue;
                }
                for &m in &free {
                    self.pack_mark[m as usize] = epoch;
                }
                packed += 1;
                if packed >= need {
                    return true;
                }
            }
        }
        false
    }

    fn pick_most_conflicted(&self) -> u16 {
        let mut best_v = usize::MAX;
        let mut best_score = 0u32;
        for v in 0..self.n {
            if self.state[v] == VState::Undecided {
                let score = self.alive_at[v];
                if best_v == usize::MAX || score > best_score {
                    best_v = v;
                    best_score = score;
                }
            }
        }
        best_v as u16
    }

    fn optimize(&mut self, best: &mut usize, best_set: &mut Vec<usize>) {
        self.nodes += 1;
        if self.alive_total == 0 {
            let size = self.in_stack.len() + self.undecided;
            if size > *best {
                let cand = self.candidate_with_all_undecided();
                if self.passes_filter(&cand) {
                    *best = size;
                    *best_set = cand;
                }
            }
            return;
        }
        let mark = self.trail.len();
        // Vertices hit by no live constraint can never complete a violation
        // here; take them for free.
        for v in 0..self.n {
            if self.state[v] == VState::Undecided && self.alive_at[v] == 0 {
                self.include(v as u16);
            }
        }
        let potential = self.in_stack.len() + self.undecided;
        if potential > *best && !self.pack_reaches(potential - *best) {
            let v = self.pick_most_conflicted();
            let inner = self.trail.len();
            self.include(v);
            self.optimize(best, best_set);
            self.undo_to(inner);
            self.exclude(v);
            self.optimize(best, best_set);
            self.undo_to(inner);
        }
        self.undo_to(mark);
    }

    /// First-hit search at a known feasible size, branching on the smallest
    /// undecided id with inclusion tried first. The first complete set is
    /// the lexicographically least one of that size.
    fn find_lex(&mut self, target: usize, found: &mut Option<Vec<usize>>) -> bool {
        self.nodes += 1;
        if self.in_stack.len() == target {
            let mut cand: Vec<usize> = self.in_stack.iter().map(|&v| v as usize).collect();
            cand.sort_unstable();
            *found = Some(cand);
            return true;
        }
        let potential = self.in_stack.len() + self.undecided;
        if potential < target {
            return false;
        }
        if self.alive_total == 0 {
            let mut cand: Vec<usize> = self.in_stack.iter().map(|&v| v as usize).collect();
            let missing = target - cand.len();
            cand.extend(
                (0..self.n)
                    .filter(|&v| self.state[v] == VState::Undecided)
                    .take(missing),
            );
            cand.sort_unstable();
            *found = Some(cand);
            return true;
        }
        if self.pack_reaches(potential - target + 1) {
            return false;
        }
        let v = (0..self.n)
            .find(|&v| self.state[v] == VState::Undecided)
            .expect("undecided vertex exists") as u16;
        let mark = self.trail.len();
        self.include(v);
        if self.find_lex(target, found) {
            return true;
        }
        self.undo_to(mark);
        self.exclude(v);
        if self.find_lex(target, found) {
            return true;
        }
        self.undo_to(mark);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: usize, triples: &[Triple], lex: bool) -> MisResult {
        max_triple_free_set(
            n,
            triples,
            &[],
            MisOptions {
                filter: None,
                lex_witness: lex,
            },
        )
    }

    #[test]
    fn no_constraints_takes_everything() {
        let r = solve(5, &[], true);
        assert_eq!(r.value, 5);
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn single_triple_drops_one() {
        let r = solve(3, &[[0, 1, 2]], true);
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, vec![0, 1]);
    }

    #[test]
    fn witness_is_lex_least_among_optima() {
        // Optima of size 3 are {0,1,3} and {0,2,3}; the first is lex-least.
        let r = solve(4, &[[0, 1, 2], [1, 2, 3]], true);
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, vec![0, 1, 3]);
    }

    #[test]
    fn matches_brute_force_on_random_hypergraphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(3..10usize);
            let mut triples: Vec<Triple> = Vec::new();
            for a in 0..n {
                for b in (a + 1)..n {
                    for c in (b + 1)..n {
                        if rng.gen_bool(0.25) {
                            triples.push([a as u16, b as u16, c as u16]);
                        }
                    }
                }
            }
            // Brute force over all subsets, tracking the lex-least optimum.
            let mut best = 0usize;
            let mut best_set: Option<Vec<usize>> = None;
            for mask in 0u32..1 << n {
                let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let ok = triples.iter().all(|t| {
                    !(s.contains(&(t[0] as usize))
                        && s.contains(&(t[1] as usize))
                        && s.contains(&(t[2] as usize)))
                });
                if ok {
                    match s.len().cmp(&best) {
                        std::cmp::Ordering::Greater => {
                            best = s.len();
                            best_set = Some(s);
                        }
                        std::cmp::Ordering::Equal => {
                            if let Some(cur) = &best_set {
                                if s < *cur {
                                    best_set = Some(s);
                                }
                            }
                        }
                        _ => {}
                    }
                }
            }
            let r = solve(n, &triples, true);
            assert_eq!(r.value, best);
            assert_eq!(Some(r.witness), best_set);
        }
    }
}
