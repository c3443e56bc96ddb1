//! Deterministic finite-state automata over the directed-edge alphabet of a
//! complex, and the acceptors for geodesic and GS path systems.
//!
//! A letter is an ordered pair of adjacent vertices, so the word of a path is
//! its sequence of directed edges; the constant path reads the empty word.
//! Machines are deterministic with partial transitions (a missing transition
//! rejects). Boolean combinators run the product construction over completed
//! machines, and minimization is Moore partition refinement followed by a
//! canonical breadth-first renumbering, so equal-language machines minimize
//! to identical tables.
//!
//! Since the complexes here are finite, the geodesic language is a finite set
//! of words and its acceptor is built directly as a minimized trie. The GS
//! acceptor subtracts, from the geodesic acceptor, the machines accepting
//! words that contain a forbidden window (a short geodesic segment already
//! carrying a bad pair) — matched anywhere for four-vertex windows and at the
//! start for three-vertex prefix windows.

use crate::complex::{Automorphism, SimplicialComplex, VertexId};
use crate::gs::{self, GsError};
use crate::paths::CombinatorialPath;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

/// A directed edge of the complex.
pub type Letter = (VertexId, VertexId);

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AutomataError {
    AlphabetMismatch,
    UnknownLetter(String),
}

impl fmt::Display for AutomataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomataError::AlphabetMismatch => write!(f, "machines have different alphabets"),
            AutomataError::UnknownLetter(l) => write!(f, "letter {l} is not in the alphabet"),
        }
    }
}

impl std::error::Error for AutomataError {}

/// All directed edges of a complex, sorted.
pub fn directed_edge_alphabet(k: &SimplicialComplex) -> Arc<Vec<Letter>> {
    let mut letters = Vec::new();
    for (u, v) in k.edges() {
        letters.push((u, v));
        letters.push((v, u));
    }
    letters.sort();
    Arc::new(letters)
}

/// The directed-edge word of a path; the constant path reads the empty word.
pub fn word_of_path(path: &CombinatorialPath) -> Vec<Letter> {
    path.vertices().windows(2).map(|w| (w[0], w[1])).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

/// A deterministic finite-state automaton with partial transitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fsa {
    alphabet: Arc<Vec<Letter>>,
    /// `transitions[state][letter_index]`
    transitions: Vec<Vec<Option<usize>>>,
    start: usize,
    accepting: Vec<bool>,
}

impl Fsa {
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn letter_index(&self, letter: Letter) -> Option<usize> {
        self.alphabet.binary_search(&letter).ok()
    }

    /// The machine accepting nothing.
    pub fn empty_language(alphabet: Arc<Vec<Letter>>) -> Fsa {
        let letters = alphabet.len();
        Fsa {
            alphabet,
            transitions: vec![vec![None; letters]],
            start: 0,
            accepting: vec![false],
        }
    }

    /// The machine accepting every word over the alphabet.
    pub fn all_words(alphabet: Arc<Vec<Letter>>) -> Fsa {
        let letters = alphabet.len();
        Fsa {
            alphabet,
            transitions: vec![vec![Some(0); letters]],
            start: 0,
            accepting: vec![true],
        }
    }

    /// Trie of a finite set of words, minimized.
    pub fn from_words(alphabet: Arc<Vec<Letter>>, words: &[Vec<Letter>]) -> Fsa {
        let letters = alphabet.len();
        let mut transitions: Vec<Vec<Option<usize>>> = vec![vec![None; letters]];
        let mut accepting = vec![false];
        for word in words {
            let mut state = 0usize;
            for &letter in word {
                let li = alphabet
                    .binary_search(&letter)
                    .expect("word letters must come from the alphabet");
                state = match transitions[state][li] {
                    Some(next) => next,
                    None => {
                        transitions.push(vec![None; letters]);
                        accepting.push(false);
                        let fresh = transitions.len() - 1;
                        transitions[state][li] = Some(fresh);
                        fresh
                    }
                };
            }
            accepting[state] = true;
        }
        Fsa { alphabet, transitions, start: 0, accepting }.minimize()
    }

    pub fn accepts_word(&self, word: &[Letter]) -> bool {
        let mut state = self.start;
        for &letter in word {
            let Some(li) = self.letter_index(letter) else { return false };
            match self.transitions[state][li] {
                Some(next) => state = next,
                None => return false,
            }
        }
        self.accepting[state]
    }

    /// Runs the edge-letter word of a path through the machine.
    pub fn accepts(&self, path: &CombinatorialPath) -> bool {
        self.accepts_word(&word_of_path(path))
    }

    /// Adds an explicit sink so every transition is total.
    fn completed(&self) -> Fsa {
        if self.transitions.iter().all(|row| row.iter().all(|t| t.is_some())) {
            return self.clone();
        }
        let letters = self.alphabet.len();
        let sink = self.transitions.len();
        let mut transitions: Vec<Vec<Option<usize>>> = self
            .transitions
            .iter()
            .map(|row| row.iter().map(|t| t.or(Some(sink))).collect())
            .collect();
        transitions.push(vec![Some(sink); letters]);
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Fsa { alphabet: Arc::clone(&self.alphabet), transitions, start: self.start, accepting }
    }

    /// Language complement over the same alphabet.
    pub fn complement(&self) -> Fsa {
        let mut c = self.completed();
        for a in &mut c.accepting {
            *a = !*a;
        }
        c.minimize()
    }

    /// Product construction for union, intersection, and difference.
    pub fn combine(&self, other: &Fsa, op: BoolOp) -> Result<Fsa, AutomataError> {
        if *self.alphabet != *other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let a = self.completed();
        let b = other.completed();
        let letters = self.alphabet.len();
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut queue = VecDeque::new();
        let start_pair = (a.start, b.start);
        index.insert(start_pair, 0);
        transitions.push(vec![None; letters]);
        accepting.push(accept_pair(op, a.accepting[a.start], b.accepting[b.start]));
        queue.push_back(start_pair);
        while let Some(pair) = queue.pop_front() {
            let si = index[&pair];
            for li in 0..letters {
                let na = a.transitions[pair.0][li].expect("completed");
                let nb = b.transitions[pair.1][li].expect("completed");
                let next_pair = (na, nb);
                let ni = *index.entry(next_pair).or_insert_with(|| {
                    transitions.push(vec![None; letters]);
                    accepting.push(accept_pair(op, a.accepting[na], b.accepting[nb]));
                    queue.push_back(next_pair);
                    transitions.len() - 1
                });
                transitions[si][li] = Some(ni);
            }
        }
        let product = Fsa {
            alphabet: Arc::clone(&self.alphabet),
            transitions,
            start: 0,
            accepting,
        };
        Ok(product.minimize())
    }

    /// Moore minimization with canonical breadth-first numbering. States
    /// that cannot reach an accepting state are pruned back to partial
    /// transitions, so the empty language always minimizes to a single
    /// rejecting state.
    pub fn minimize(&self) -> Fsa {
        let letters = self.alphabet.len();
        let total = self.completed();
        // reachable states
        let n = total.transitions.len();
        let mut reachable = vec![false; n];
        let mut queue = VecDeque::new();
        reachable[total.start] = true;
        queue.push_back(total.start);
        while let Some(s) = queue.pop_front() {
            for li in 0..letters {
                let t = total.transitions[s][li].expect("completed");
                if !reachable[t] {
                    reachable[t] = true;
                    queue.push_back(t);
                }
            }
        }
        // Moore refinement over reachable states
        let mut class: Vec<usize> = total
            .accepting
            .iter()
            .map(|&a| if a { 1 } else { 0 })
            .collect();
        loop {
            let mut signatures: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next_class = vec![0usize; n];
            for s in 0..n {
                if !reachable[s] {
                    continue;
                }
                let sig: Vec<usize> = (0..letters)
                    .map(|li| class[total.transitions[s][li].expect("completed")])
                    .collect();
                let key = (class[s], sig);
                let fresh = signatures.len();
                let id = *signatures.entry(key).or_insert(fresh);
                next_class[s] = id;
            }
            if (0..n).filter(|&s| reachable[s]).all(|s| next_class[s] == class[s]) {
                break;
            }
            class = next_class;
        }
        // representative transitions per class
        let mut rep_of_class: BTreeMap<usize, usize> = BTreeMap::new();
        for s in 0..n {
            if reachable[s] {
                rep_of_class.entry(class[s]).or_insert(s);
            }
        }
        // canonical breadth-first order from the start class
        let mut order: Vec<usize> = Vec::new();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut queue = VecDeque::new();
        queue.push_back(class[total.start]);
        seen.insert(class[total.start]);
        while let Some(c) = queue.pop_front() {
            order.push(c);
            let rep = rep_of_class[&c];
            for li in 0..letters {
                let t = class[total.transitions[rep][li].expect("completed")];
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let renumber: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut transitions = vec![vec![None; letters]; order.len()];
        let mut accepting = vec![false; order.len()];
        for &c in &order {
            let rep = rep_of_class[&c];
            let si = renumber[&c];
            accepting[si] = total.accepting[rep];
            for li in 0..letters {
                let t = class[total.transitions[rep][li].expect("completed")];
                transitions[si][li] = Some(renumber[&t]);
            }
        }
        // prune states from which no accepting state is reachable
        let m = order.len();
        let mut alive = accepting.clone();
        loop {
            let mut changed = false;
            for s in 0..m {
                if alive[s] {
                    continue;
                }
                if (0..letters).any(|li| transitions[s][li].map(|t| alive[t]).unwrap_or(false)) {
                    alive[s] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !alive[0] {
            return Fsa::empty_language(Arc::clone(&self.alphabet));
        }
        let kept: Vec<usize> = (0..m).filter(|&s| alive[s]).collect();
        let remap: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let transitions = kept
            .iter()
            .map(|&s| {
                (0..letters)
                    .map(|li| transitions[s][li].filter(|t| alive[*t]).map(|t| remap[&t]))
                    .collect()
            })
            .collect();
        let accepting = kept.iter().map(|&s| accepting[s]).collect();
        Fsa {
            alphabet: Arc::clone(&self.alphabet),
            transitions,
            start: remap[&0],
            accepting,
        }
    }

    pub fn is_empty_language(&self) -> bool {
        // reachable accepting state?
        let mut seen = vec![false; self.transitions.len()];
        let mut queue = VecDeque::new();
        seen[self.start] = true;
        queue.push_back(self.start);
        while let Some(s) = queue.pop_front() {
            if self.accepting[s] {
                return false;
            }
            for t in self.transitions[s].iter().flatten() {
                if !seen[*t] {
                    seen[*t] = true;
                    queue.push_back(*t);
                }
            }
        }
        true
    }

    /// Exact language equality via emptiness of both differences.
    pub fn language_equal(&self, other: &Fsa) -> Result<bool, AutomataError> {
        Ok(self.combine(other, BoolOp::Difference)?.is_empty_language()
            && other.combine(self, BoolOp::Difference)?.is_empty_language())
    }

    /// All accepted words of length at most `max_len`, sorted.
    pub fn enumerate_language(&self, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        let mut frontier: Vec<(usize, Vec<Letter>)> = vec![(self.start, Vec::new())];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for (state, word) in &frontier {
                if self.accepting[*state] {
                    out.push(word.clone());
                }
                if word.len() < max_len {
                    for (li, t) in self.transitions[*state].iter().enumerate() {
                        if let Some(t) = t {
                            let mut w = word.clone();
                            w.push(self.alphabet[li]);
                            next.push((*t, w));
                        }
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Adjacency text: one `state letter state` line per transition, with
    /// start and accepting headers.
    pub fn to_adjacency_text(&self, k: &SimplicialComplex) -> String {
        let mut out = format!("states {}\nstart {}\n", self.state_count(), self.start);
        let acc: Vec<String> = self
            .accepting
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| i.to_string())
            .collect();
        out.push_str(&format!("accepting {}\n", acc.join(" ")));
        for (s, row) in self.transitions.iter().enumerate() {
            for (li, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let (u, v) = self.alphabet[li];
                    out.push_str(&format!("{} {}>{} {}\n", s, k.name(u), k.name(v), t));
                }
            }
        }
        out
    }

    /// Graphviz text for visual inspection.
    pub fn to_dot(&self, k: &SimplicialComplex) -> String {
        let mut out = String::from("digraph fsa {\n  rankdir=LR;\n  node [shape=circle];\n");
        for (i, &acc) in self.accepting.iter().enumerate() {
            if acc {
                out.push_str(&format!("  {i} [shape=doublecircle];\n"));
            }
        }
        out.push_str(&format!("  init [shape=point]; init -> {};\n", self.start));
        for (s, row) in self.transitions.iter().enumerate() {
            for (li, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let (u, v) = self.alphabet[li];
                    out.push_str(&format!(
                        "  {} -> {} [label=\"{}>{}\"];\n",
                        s,
                        t,
                        k.name(u),
                        k.name(v)
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn accept_pair(op: BoolOp, a: bool, b: bool) -> bool {
    match op {
        BoolOp::Union => a || b,
        BoolOp::Intersection => a && b,
        BoolOp::Difference => a && !b,
    }
}

/// The machine accepting exactly the words of valid paths: states remember
/// the current vertex.
pub fn path_validity_fsa(k: &SimplicialComplex) -> Fsa {
    let alphabet = directed_edge_alphabet(k);
    let letters = alphabet.len();
    // state 0: nothing read yet; state 1+i: at vertex i
    let n = k.names().len();
    let mut transitions = vec![vec![None; letters]; n + 1];
    let mut accepting = vec![true; n + 1];
    accepting[0] = true;
    for (li, &(u, v)) in alphabet.iter().enumerate() {
        transitions[0][li] = Some(1 + v.index());
        transitions[1 + u.index()][li] = Some(1 + v.index());
    }
    Fsa { alphabet, transitions, start: 0, accepting }
}

/// Patterns for a subpath and its images under the closure of the given
/// automorphisms, as letter words, deduplicated.
fn lifted_patterns(beta: &CombinatorialPath, autos: &[Automorphism]) -> Vec<Vec<Letter>> {
    let group = if autos.is_empty() {
        Vec::new()
    } else {
        Automorphism::closure(autos, 100_000)
    };
    let mut patterns: BTreeSet<Vec<Letter>> = BTreeSet::new();
    patterns.insert(word_of_path(beta));
    for g in &group {
        let image: Vec<VertexId> = g.apply_sequence(beta.vertices());
        patterns.insert(image.windows(2).map(|w| (w[0], w[1])).collect());
    }
    patterns.into_iter().collect()
}

/// Builds the subword matcher for a set of patterns: an Aho-Corasick
/// automaton over the directed-edge alphabet whose accepting states absorb.
/// With `anchored`, patterns match only at the start of the word.
fn pattern_fsa(alphabet: Arc<Vec<Letter>>, patterns: &[Vec<Letter>], anchored: bool) -> Fsa {
    let letters = alphabet.len();
    // trie of the patterns
    let mut children: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new()];
    let mut terminal = vec![false];
    for p in patterns {
        let mut node = 0usize;
        for &letter in p {
            let li = alphabet.binary_search(&letter).expect("pattern over alphabet");
            node = match children[node].get(&li) {
                Some(&next) => next,
                None => {
                    children.push(BTreeMap::new());
                    terminal.push(false);
                    let fresh = children.len() - 1;
                    children[node].insert(li, fresh);
                    fresh
                }
            };
        }
        terminal[node] = true;
    }
    let n = children.len();
    // breadth-first failure links
    let mut fail = vec![0usize; n];
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = children[0].values().copied().collect();
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for (&li, &v) in children[u].clone().iter() {
            let mut f = fail[u];
            loop {
                if let Some(&t) = children[f].get(&li) {
                    if t != v {
                        fail[v] = t;
                        break;
                    }
                }
                if f == 0 {
                    fail[v] = *children[0].get(&li).filter(|&&t| t != v).unwrap_or(&0);
                    break;
                }
                f = fail[f];
            }
            terminal[v] = terminal[v] || terminal[fail[v]];
            queue.push_back(v);
        }
    }
    // accepting sink that absorbs everything
    let sink = n;
    let mut transitions = vec![vec![None; letters]; n + 1];
    let mut accepting = vec![false; n + 1];
    accepting[sink] = true;
    for li in 0..letters {
        transitions[sink][li] = Some(sink);
    }
    for node in std::iter::once(0).chain(order.into_iter()) {
        if terminal[node] {
            // already matched: absorb
            for li in 0..letters {
                transitions[node][li] = Some(sink);
            }
            accepting[node] = true;
            continue;
        }
        for li in 0..letters {
            // goto with failure fallback; anchored machines drop dead instead
            let mut f = node;
            let target = loop {
                if let Some(&t) = children[f].get(&li) {
                    break Some(t);
                }
                if f == 0 {
                    break None;
                }
                f = fail[f];
            };
            transitions[node][li] = match target {
                Some(t) if terminal[t] => Some(sink),
                Some(t) => Some(t),
                None => {
                    if anchored {
                        None
                    } else {
                        Some(0)
                    }
                }
            };
        }
    }
    Fsa { alphabet, transitions, start: 0, accepting }.minimize()
}

/// The machine accepting exactly the words containing an image of `beta`
/// under the closure of `autos` as a consecutive subword.
pub fn forbidden_subpath_fsa(
    k: &SimplicialComplex,
    beta: &CombinatorialPath,
    autos: &[Automorphism],
) -> Fsa {
    pattern_fsa(directed_edge_alphabet(k), &lifted_patterns(beta, autos), false)
}

/// As [`forbidden_subpath_fsa`], but patterns match only at the word start.
pub fn forbidden_prefix_fsa(
    k: &SimplicialComplex,
    beta: &CombinatorialPath,
    autos: &[Automorphism],
) -> Fsa {
    pattern_fsa(directed_edge_alphabet(k), &lifted_patterns(beta, autos), true)
}

/// Acceptor of the geodesic path system between the given basepoints: the
/// minimized trie of the (finite) geodesic language.
pub fn geodesic_fsa(
    k: &SimplicialComplex,
    basepoints: &[VertexId],
) -> Result<Fsa, GsError> {
    let system = gs::geodesic_system(k, basepoints)?;
    let words: Vec<Vec<Letter>> = system.members().iter().map(word_of_path).collect();
    Ok(Fsa::from_words(directed_edge_alphabet(k), &words))
}

/// Acceptor of the GS path system between the given basepoints: the geodesic
/// acceptor minus the machines for the complex's forbidden windows (lifted
/// through the given automorphisms).
pub fn gs_fsa(
    k: &SimplicialComplex,
    basepoints: &[VertexId],
    autos: &[Automorphism],
) -> Result<Fsa, GsError> {
    let mut machine = geodesic_fsa(k, basepoints)?;
    for (window, anchored) in gs::bad_windows(k)? {
        let matcher = if anchored {
            forbidden_prefix_fsa(k, &window, autos)
        } else {
            forbidden_subpath_fsa(k, &window, autos)
        };
        machine = machine
            .combine(&matcher, BoolOp::Difference)
            .expect("same alphabet");
    }
    Ok(machine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn path(k: &SimplicialComplex, names: &[&str]) -> CombinatorialPath {
        CombinatorialPath::from_names(k, names).unwrap()
    }

    /// Deterministic pseudo-random generator for machine fuzzing.
    struct SplitMix(u64);

    impl SplitMix {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }

        fn below(&mut self, n: usize) -> usize {
            (self.next() % n as u64) as usize
        }
    }

    fn random_fsa(alphabet: &Arc<Vec<Letter>>, rng: &mut SplitMix) -> Fsa {
        let states = 1 + rng.below(5);
        let letters = alphabet.len();
        let transitions = (0..states)
            .map(|_| {
                (0..letters)
                    .map(|_| {
                        if rng.below(4) == 0 {
                            None
                        } else {
                            Some(rng.below(states))
                        }
                    })
                    .collect()
            })
            .collect();
        let accepting = (0..states).map(|_| rng.below(2) == 1).collect();
        Fsa {
            alphabet: Arc::clone(alphabet),
            transitions,
            start: 0,
            accepting,
        }
    }

    fn brute_words(alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
        let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in alphabet {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v.clone());
                    out.push(v);
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn boolean_ops_match_brute_force_languages() {
        let k = SimplicialComplex::from_named(&[&["a", "b"]]).unwrap();
        let alphabet = directed_edge_alphabet(&k);
        assert_eq!(alphabet.len(), 2);
        let words = brute_words(&alphabet, 8);
        let mut rng = SplitMix(7);
        for _ in 0..100 {
            let m1 = random_fsa(&alphabet, &mut rng);
            let m2 = random_fsa(&alphabet, &mut rng);
            let union = m1.combine(&m2, BoolOp::Union).unwrap();
            let inter = m1.combine(&m2, BoolOp::Intersection).unwrap();
            let diff = m1.combine(&m2, BoolOp::Difference).unwrap();
            let comp = m1.complement();
            let min1 = m1.minimize();
            for w in &words {
                let (a, b) = (m1.accepts_word(w), m2.accepts_word(w));
                assert_eq!(union.accepts_word(w), a || b);
                assert_eq!(inter.accepts_word(w), a && b);
                assert_eq!(diff.accepts_word(w), a && !b);
                assert_eq!(comp.accepts_word(w), !a);
                assert_eq!(min1.accepts_word(w), a);
            }
        }
    }

    #[test]
    fn boolean_identities() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c"]]).unwrap();
        let alphabet = directed_edge_alphabet(&k);
        let mut rng = SplitMix(99);
        let empty = Fsa::empty_language(Arc::clone(&alphabet));
        for _ in 0..20 {
            let m = random_fsa(&alphabet, &mut rng);
            let m2 = random_fsa(&alphabet, &mut rng);
            // L u {} = L, L n ~L = {}
            assert!(m.combine(&empty, BoolOp::Union).unwrap().language_equal(&m).unwrap());
            assert!(m
                .combine(&m.complement(), BoolOp::Intersection)
                .unwrap()
                .is_empty_language());
            // De Morgan: ~(L1 u L2) = ~L1 n ~L2
            let lhs = m.combine(&m2, BoolOp::Union).unwrap().complement();
            let rhs = m
                .complement()
                .combine(&m2.complement(), BoolOp::Intersection)
                .unwrap();
            assert!(lhs.language_equal(&rhs).unwrap());
        }
    }

    #[test]
    fn minimization_is_canonical() {
        // two different tries for the same finite language minimize equal
        let k = SimplicialComplex::from_named(&[&["a", "b", "c"]]).unwrap();
        let alphabet = directed_edge_alphabet(&k);
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let c = k.vertex_by_name("c").unwrap();
        let words = vec![vec![(a, b)], vec![(a, c)], vec![(a, b), (b, c)]];
        let m1 = Fsa::from_words(Arc::clone(&alphabet), &words);
        let mut rev = words.clone();
        rev.reverse();
        let m2 = Fsa::from_words(Arc::clone(&alphabet), &rev);
        assert_eq!(m1, m2);
        assert!(m1.language_equal(&m2).unwrap());
    }

    #[test]
    fn path_validity_machine() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let m = path_validity_fsa(&k);
        assert!(m.accepts(&path(&k, &["v0", "v1", "v2"])));
        assert!(m.accepts(&path(&k, &["o"])));
        // a word that is not a path: edges that do not chain
        let v0 = k.vertex_by_name("v0").unwrap();
        let v1 = k.vertex_by_name("v1").unwrap();
        let v3 = k.vertex_by_name("v3").unwrap();
        let v4 = k.vertex_by_name("v4").unwrap();
        assert!(!m.accepts_word(&[(v0, v1), (v3, v4)]));
    }

    #[test]
    fn forbidden_subpath_machine() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let beta = path(&k, &["v0", "v1", "v2", "v3"]);
        let m = forbidden_subpath_fsa(&k, &beta, &[]);
        assert!(m.accepts(&beta));
        assert!(m.accepts(&path(&k, &["v5", "v0", "v1", "v2", "v3", "v4"])));
        assert!(!m.accepts(&path(&k, &["v3", "v2", "v1", "v0"]))); // reverse
        assert!(!m.accepts(&path(&k, &["v0", "v1", "v2"]))); // too short
        let anchored = forbidden_prefix_fsa(&k, &path(&k, &["v0", "v1", "v2"]), &[]);
        assert!(anchored.accepts(&path(&k, &["v0", "v1", "v2", "v3"])));
        assert!(!anchored.accepts(&path(&k, &["v5", "v0", "v1", "v2"])));
    }

    #[test]
    fn forbidden_subpath_machine_with_lifts() {
        let (k, _) = fixtures::octahedron().unwrap();
        // quarter turn about z
        let perm_from = |pairs: &[(&str, &str)]| -> Vec<u32> {
            let mut perm = vec![0u32; k.vertex_count()];
            for &(from, to) in pairs {
                let f = k.vertex_by_name(from).unwrap();
                let t = k.vertex_by_name(to).unwrap();
                perm[f.index()] = t.0;
            }
            perm
        };
        let rot = k
            .validate_automorphism(&perm_from(&[
                ("xp", "yp"),
                ("yp", "xm"),
                ("xm", "ym"),
                ("ym", "xp"),
                ("zp", "zp"),
                ("zm", "zm"),
            ]))
            .unwrap();
        let beta = path(&k, &["xp", "yp", "xm"]);
        let m = forbidden_subpath_fsa(&k, &beta, &[rot.clone()]);
        // the rotated image yp -> xm -> ym is accepted as a lift
        let image = CombinatorialPath::new(&k, rot.apply_sequence(beta.vertices())).unwrap();
        assert!(m.accepts(&image));
        // without lifts it is not
        let bare = forbidden_subpath_fsa(&k, &beta, &[]);
        assert!(!bare.accepts(&image));
        // the empty path contains nothing
        assert!(!m.accepts(&path(&k, &["zp"])));
    }

    #[test]
    fn geodesic_fsa_on_tetrahedron() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c", "d"]]).unwrap();
        let m = geodesic_fsa(&k, k.vertices()).unwrap();
        // the empty word (constant paths) and the 12 directed edges, nothing else
        let language = m.enumerate_language(4);
        assert_eq!(language.len(), 13);
        assert!(language.contains(&Vec::new()));
        assert_eq!(language.iter().filter(|w| w.len() == 1).count(), 12);
    }

    #[test]
    fn geodesic_fsa_on_hex_disk() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let m = geodesic_fsa(&k, k.vertices()).unwrap();
        assert!(m.accepts(&path(&k, &["v0", "o", "v3"])));
        assert!(!m.accepts(&path(&k, &["v0", "v1", "v2", "v3"])));
        assert!(!m.accepts(&path(&k, &["v0", "v1", "v0"])));
        // language equals the brute-force geodesic word set (all constant
        // paths read the same empty word)
        let system = gs::geodesic_system(&k, k.vertices()).unwrap();
        let mut words: Vec<Vec<Letter>> = system.members().iter().map(word_of_path).collect();
        words.sort();
        words.dedup();
        assert_eq!(m.enumerate_language(8), words);
    }

    #[test]
    fn geodesic_fsa_prefix_closed_over_all_basepoints() {
        for spec in ["hex_disk", "octahedron", "stacked_tets:6"] {
            let (k, _) = fixtures::generate_fixture(spec).unwrap();
            let m = geodesic_fsa(&k, k.vertices()).unwrap();
            for w in m.enumerate_language(8) {
                for cut in 0..w.len() {
                    assert!(m.accepts_word(&w[..cut]), "{spec}: prefix of {w:?}");
                }
            }
        }
    }

    #[test]
    fn gs_fsa_equals_brute_force_gs_set() {
        // resolve fixture: both directions of the bad window are excluded
        let k = SimplicialComplex::from_named(&[
            &["a", "b", "x"],
            &["b", "x", "y"],
            &["b", "c", "y"],
            &["c", "d", "y"],
        ])
        .unwrap();
        let machine = gs_fsa(&k, k.vertices(), &[]).unwrap();
        let brute = gs::gs_system(&k, k.vertices()).unwrap();
        let words: Vec<Vec<Letter>> = brute.members().iter().map(word_of_path).collect();
        let trie = Fsa::from_words(directed_edge_alphabet(&k), &words);
        assert!(machine.language_equal(&trie).unwrap());
        assert!(!machine.accepts(&path(&k, &["a", "b", "c", "d"])));
        assert!(machine.accepts(&path(&k, &["a", "b", "y", "d"])));
    }

    #[test]
    fn gs_fsa_equals_geodesic_fsa_without_bad_windows() {
        for spec in ["hex_disk", "stacked_tets:6", "octahedron"] {
            let (k, _) = fixtures::generate_fixture(spec).unwrap();
            assert!(gs::bad_windows(&k).unwrap().is_empty(), "{spec}");
            let g = geodesic_fsa(&k, k.vertices()).unwrap();
            let m = gs_fsa(&k, k.vertices(), &[]).unwrap();
            assert!(m.language_equal(&g).unwrap(), "{spec}");
        }
    }

    #[test]
    fn basepoint_restriction() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let v0 = k.vertex_by_name("v0").unwrap();
        let v3 = k.vertex_by_name("v3").unwrap();
        let m = geodesic_fsa(&k, &[v0, v3]).unwrap();
        assert!(m.accepts(&path(&k, &["v0", "o", "v3"])));
        // geodesic, but does not start in the basepoint set
        assert!(!m.accepts(&path(&k, &["v1", "o", "v4"])));
    }
}
