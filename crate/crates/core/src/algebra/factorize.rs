//! Writing a basis diagram as a word in `U_i`, `α`, `β`, `ζ`, `ε`.
//!
//! Nested caps are peeled off first (`D = U_i·D′` on the north face, and
//! the reflected statement on the south face). A diagram with no nested caps
//! is reached from a seed `G·U_4·U_6⋯U_{2r}` (or `U_1·U_3⋯` with no
//! propagating edges) by a sequence of left multiplications, each of which
//! moves one free point or one decoration on the north face. The south face
//! is handled by running the same planner on the reflection.

use num_traits::One;

use super::words::{Alphabet, GeneratorWord, Letter};
use super::AlgebraElement;
use crate::diagram::{Diagram, DyadicForm, HalfDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Cap(bool),
    Free,
}

impl Tok {
    fn width(self) -> usize {
        match self {
            Tok::Cap(_) => 2,
            Tok::Free => 1,
        }
    }
}

fn tokens(h: &HalfDiagram) -> Option<Vec<Tok>> {
    let mut out = Vec::new();
    let mut p = 1;
    while p <= h.m() {
        match h.pair_of(p) {
            None => {
                out.push(Tok::Free);
                p += 1;
            }
            Some(i) => {
                let (a, b) = h.pairs()[i];
                if a != p || b != p + 1 {
                    return None;
                }
                out.push(Tok::Cap(h.is_decorated(i)));
                p += 2;
            }
        }
    }
    Some(out)
}

fn half_from_tokens(m: usize, toks: &[Tok]) -> HalfDiagram {
    let mut pairs = Vec::new();
    let mut mask = 0u64;
    let mut p = 1;
    for &t in toks {
        if let Tok::Cap(d) = t {
            if d {
                mask |= 1 << pairs.len();
            }
            pairs.push((p, p + 1));
        }
        p += t.width();
    }
    HalfDiagram::from_raw(m, pairs, mask)
}

/// Factorizes with a freshly built alphabet.
pub fn factorize(d: &Diagram) -> Result<GeneratorWord> {
    let alphabet = Alphabet::new(d.m())?;
    factorize_with(&alphabet, d)
}

/// Returns a word whose value is exactly `1·d`.
pub fn factorize_with(alphabet: &Alphabet, d: &Diagram) -> Result<GeneratorWord> {
    if d.m() != alphabet.m() {
        return Err(Error::StrandMismatch { left: d.m(), right: alphabet.m() });
    }
    if d.m() < 3 {
        return Err(Error::Domain("factorization needs at least 3 strands".into()));
    }
    let w = factor_rec(alphabet, d)?;
    let value = alphabet.evaluate(&w)?;
    if !value.is_diagram(d) {
        return Err(Error::Factorization(format!("word {w} evaluates to {value}, expected {d}")));
    }
    Ok(w)
}

fn factor_rec(alphabet: &Alphabet, d: &Diagram) -> Result<GeneratorWord> {
    if let Some((i, rest)) = unnest_north(alphabet, d)? {
        let mut w = vec![Letter::U(i)];
        w.extend(factor_rec(alphabet, &rest)?.0);
        return Ok(GeneratorWord(w));
    }
    if let Some((i, rest)) = unnest_north(alphabet, &d.star())? {
        let mut w = factor_rec(alphabet, &rest.star())?.0;
        w.push(Letter::U(i));
        return Ok(GeneratorWord(w));
    }
    factor_flat(alphabet, d)
}

/// Finds an innermost cap `{i,i+1}` directly inside a cap `{j,k}` and
/// returns `(i, D′)` with `D = U_i·D′`, where `D′` has caps `{j,i}` and
/// `{i+1,k}` instead.
fn unnest_north(alphabet: &Alphabet, d: &Diagram) -> Result<Option<(usize, Diagram)>> {
    let h = &d.form().d1;
    let pairs: Vec<(usize, usize, bool)> = h.pairs_with_dec().collect();
    for (idx, &(i, i1, _)) in pairs.iter().enumerate() {
        if i1 != i + 1 {
            continue;
        }
        let parent = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b, _))| a < i && i1 < b)
            .max_by_key(|(_, &(a, _, _))| a);
        let Some((pidx, &(j, k, pdec))) = parent else { continue };
        let mut new_pairs: Vec<(usize, usize, bool)> = pairs
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != idx && x != pidx)
            .map(|(_, &p)| p)
            .collect();
        new_pairs.push((j, i, pdec));
        new_pairs.push((i1, k, false));
        let north = HalfDiagram::new(h.m(), &new_pairs)?;
        let rest = Diagram::from_dyadic(DyadicForm::new(north, d.form().d2.clone(), d.form().bullet))?;
        let check = alphabet.letter(Letter::U(i))?.multiply(&AlgebraElement::from_diagram(rest.clone()))?;
        if !check.is_diagram(d) {
            return Err(Error::Factorization(format!("U{i}·{rest} = {check}, expected {d}")));
        }
        return Ok(Some((i, rest)));
    }
    Ok(None)
}

fn factor_flat(alphabet: &Alphabet, d: &Diagram) -> Result<GeneratorWord> {
    if d.rank() == 0 {
        return Ok(GeneratorWord::default());
    }
    let north = tokens(&d.form().d1).ok_or_else(|| Error::Factorization("north face is nested".into()))?;
    let south = tokens(&d.form().d2).ok_or_else(|| Error::Factorization("south face is nested".into()))?;
    let seed_word = seed(alphabet, d, &north, &south)?;
    let seed_diagram = single_diagram(&alphabet.evaluate(&seed_word)?)?;

    let (left, mid) = plan_north(alphabet, &seed_diagram, &north)?;
    let (right_star, full_star) = plan_north(alphabet, &mid.star(), &south)?;
    let full = full_star.star();
    if &full != d {
        return Err(Error::Factorization(format!("planner reached {full}, expected {d}")));
    }
    let mut w = left.0;
    w.extend(seed_word.0);
    w.extend(right_star.star().0);
    Ok(GeneratorWord(w))
}

fn single_diagram(x: &AlgebraElement) -> Result<Diagram> {
    match x.single() {
        Some((d, c)) if c.is_one() => Ok(d.clone()),
        _ => Err(Error::Factorization(format!("expected a single diagram, got {x}"))),
    }
}

/// The seed: one of eight three-strand words (chosen by whether each face
/// starts with a free point and by the bullet), followed by `U_4, U_6, …`;
/// or `U_1 U_3 ⋯` when nothing propagates.
fn seed(alphabet: &Alphabet, d: &Diagram, north: &[Tok], south: &[Tok]) -> Result<GeneratorWord> {
    let m = d.m();
    let r = d.rank();
    if d.propagating_count() == 0 {
        return Ok(GeneratorWord((0..r).map(|s| Letter::U(2 * s + 1)).collect()));
    }
    let want = (north[0] == Tok::Free, south[0] == Tok::Free, d.form().bullet);
    use Letter::*;
    let candidates = [
        vec![U(1)],
        vec![U(2)],
        vec![U(1), U(2)],
        vec![U(2), U(1)],
        vec![U(1), Beta],
        vec![U(2), Alpha],
        vec![U(1), Zeta],
        vec![U(2), Epsilon],
    ];
    let mut chosen = None;
    for c in candidates {
        let g = single_diagram(&alphabet.evaluate(&GeneratorWord(c.clone()))?)?;
        let f = g.form();
        let props = (f.d1.free_points()[0] == 1, f.d2.free_points()[0] == 1, f.bullet);
        if props == want {
            if chosen.is_some() {
                return Err(Error::Factorization("two seed diagrams share properties".into()));
            }
            chosen = Some(c);
        }
    }
    let mut w = chosen.ok_or_else(|| Error::Factorization("no seed diagram matches".into()))?;
    for s in 2..=r {
        if 2 * s >= m {
            return Err(Error::Factorization("seed exceeds strand count".into()));
        }
        w.push(Letter::U(2 * s));
    }
    Ok(GeneratorWord(w))
}

struct Planner<'a> {
    alphabet: &'a Alphabet,
    current: Diagram,
    toks: Vec<Tok>,
    /// Accumulated left multiplier, as a word.
    word: Vec<Letter>,
}

impl<'a> Planner<'a> {
    fn pos(&self, idx: usize) -> usize {
        1 + self.toks[..idx].iter().map(|t| t.width()).sum::<usize>()
    }

    fn apply(&mut self, letters: Vec<Letter>, new_toks: Vec<Tok>) -> Result<()> {
        let f = self.current.form();
        let north = half_from_tokens(f.d1.m(), &new_toks);
        let expected = Diagram::from_dyadic(DyadicForm::new(north, f.d2.clone(), f.bullet))?;
        let w = GeneratorWord(letters);
        let got = self.alphabet.evaluate(&w)?.multiply(&AlgebraElement::from_diagram(self.current.clone()))?;
        if !got.is_diagram(&expected) {
            return Err(Error::Factorization(format!(
                "move {w} on {} gave {got}, expected {expected}",
                self.current
            )));
        }
        let mut word = w.0;
        word.append(&mut self.word);
        self.word = word;
        self.current = expected;
        self.toks = new_toks;
        Ok(())
    }

    fn need(&self, ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Factorization(format!("precondition of {what} fails at {:?}", self.toks)))
        }
    }

    /// `[F_p, C_{p+1}] → [C_p, F_{p+2}]` via `U_p`, `p > 1`.
    fn free_east(&mut self, idx: usize) -> Result<()> {
        let p = self.pos(idx);
        self.need(
            p > 1 && self.toks[idx] == Tok::Free && self.toks.get(idx + 1) == Some(&Tok::Cap(false)),
            "free_east",
        )?;
        let mut t = self.toks.clone();
        t.swap(idx, idx + 1);
        self.apply(vec![Letter::U(p)], t)
    }

    /// `[C_p, F_{p+2}] → [F_p, C_{p+1}]` via `U_{p+1}`.
    fn free_west(&mut self, idx: usize) -> Result<()> {
        self.need(
            idx > 0 && self.toks[idx] == Tok::Free && self.toks[idx - 1] == Tok::Cap(false),
            "free_west",
        )?;
        let p = self.pos(idx - 1);
        let mut t = self.toks.clone();
        t.swap(idx - 1, idx);
        self.apply(vec![Letter::U(p + 1)], t)
    }

    /// `[C•_1, C_3] → [C•_1, C•_3]` via `α`.
    fn decorate_second(&mut self) -> Result<()> {
        self.need(
            self.toks.len() > 1 && self.toks[0] == Tok::Cap(true) && self.toks[1] == Tok::Cap(false),
            "decorate_second",
        )?;
        let mut t = self.toks.clone();
        t[1] = Tok::Cap(true);
        self.apply(vec![Letter::Alpha], t)
    }

    /// `[C•_i, C_{i+2}] → [C_i, C•_{i+2}]` via `U_i U_{i+1}`, `i ≥ 3`.
    fn push_east(&mut self, idx: usize) -> Result<()> {
        let i = self.pos(idx);
        self.need(
            i >= 3 && self.toks[idx] == Tok::Cap(true) && self.toks.get(idx + 1) == Some(&Tok::Cap(false)),
            "push_east",
        )?;
        let mut t = self.toks.clone();
        t[idx] = Tok::Cap(false);
        t[idx + 1] = Tok::Cap(true);
        self.apply(vec![Letter::U(i), Letter::U(i + 1)], t)
    }

    /// `[C_i, C•_{i+2}] → [C•_i, C_{i+2}]` via `U_{i+2} U_{i+1}`, `i ≥ 3`.
    fn pull_west(&mut self, idx: usize) -> Result<()> {
        let i = self.pos(idx);
        self.need(
            i >= 3 && self.toks[idx] == Tok::Cap(false) && self.toks.get(idx + 1) == Some(&Tok::Cap(true)),
            "pull_west",
        )?;
        let mut t = self.toks.clone();
        t[idx] = Tok::Cap(true);
        t[idx + 1] = Tok::Cap(false);
        self.apply(vec![Letter::U(i + 2), Letter::U(i + 1)], t)
    }

    /// `[C•_1, C_3] → [C_1, C_3]` via `U_3 ζ`.
    fn undecorate_first(&mut self) -> Result<()> {
        self.need(
            self.toks.len() > 1 && self.toks[0] == Tok::Cap(true) && self.toks[1] == Tok::Cap(false),
            "undecorate_first",
        )?;
        let mut t = self.toks.clone();
        t[0] = Tok::Cap(false);
        self.apply(vec![Letter::U(3), Letter::Zeta], t)
    }

    fn free_index(&self, nth: usize) -> usize {
        self.toks
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == Tok::Free)
            .nth(nth)
            .map(|(i, _)| i)
            .expect("free point exists")
    }

    /// Moves the extra free points (second and later) west until each has
    /// as many caps before it as in `target`.
    fn place_extra_frees(&mut self, target: &[Tok]) -> Result<()> {
        let caps_before: Vec<usize> = target
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == Tok::Free)
            .map(|(i, _)| target[..i].iter().filter(|t| matches!(t, Tok::Cap(_))).count())
            .collect();
        for (nth, &want) in caps_before.iter().enumerate().skip(1) {
            loop {
                let idx = self.free_index(nth);
                let have = self.toks[..idx].iter().filter(|t| matches!(t, Tok::Cap(_))).count();
                if have <= want {
                    break;
                }
                self.free_west(idx)?;
            }
        }
        Ok(())
    }

    /// Sets the decorations of the first `flags.len()` caps, which must be
    /// contiguous from point 1 and start as `[C•, C, C, …]`.
    fn decorate_group(&mut self, flags: &[bool]) -> Result<()> {
        let g = flags.len();
        if flags[0] {
            for j in (1..g).rev().filter(|&j| flags[j]) {
                self.decorate_second()?;
                for idx in 1..j {
                    self.push_east(idx)?;
                }
            }
            return Ok(());
        }
        let targets: Vec<usize> = (1..g).filter(|&j| flags[j]).collect();
        let q = targets.len();
        if g < q + 2 {
            return Err(Error::Factorization("no undecorated cap available to clear the first".into()));
        }
        let first_slot = g - q;
        for s in (first_slot..g).rev() {
            self.decorate_second()?;
            for idx in 1..s {
                self.push_east(idx)?;
            }
        }
        self.undecorate_first()?;
        for (k, &t) in targets.iter().enumerate() {
            let s = first_slot + k;
            for idx in (t..s).rev() {
                self.pull_west(idx)?;
            }
        }
        Ok(())
    }
}

/// Left-multiplies `start` by moves until its north face reads `target`.
/// Returns the accumulated left factor and the resulting diagram.
fn plan_north(alphabet: &Alphabet, start: &Diagram, target: &[Tok]) -> Result<(GeneratorWord, Diagram)> {
    let toks = tokens(&start.form().d1).ok_or_else(|| Error::Factorization("seed face is nested".into()))?;
    let mut pl = Planner { alphabet, current: start.clone(), toks, word: Vec::new() };
    let n_free = target.iter().filter(|t| **t == Tok::Free).count();
    if n_free == 0 {
        pl.decorate_group(&caps_flags(target))?;
    } else if target[0] == Tok::Free {
        pl.place_extra_frees(target)?;
    } else {
        let first_free = target.iter().position(|t| *t == Tok::Free).expect("has free");
        let group: Vec<bool> = caps_flags(&target[..first_free]);
        let ext = !group[0] && group[1..].iter().all(|&x| x);
        // In the extended case the first cap after the first free point is
        // borrowed into the group and moved back at the end.
        let (staged, borrowed_run) = if ext {
            let cap_after = (first_free..target.len())
                .find(|&i| matches!(target[i], Tok::Cap(_)))
                .ok_or_else(|| Error::Factorization("no cap to borrow".into()))?;
            let mut staged = target.to_vec();
            let cap = staged.remove(cap_after);
            staged.insert(first_free, cap);
            (staged, cap_after - first_free)
        } else {
            (target.to_vec(), 0)
        };
        let g = if ext { first_free + 1 } else { first_free };
        for idx in 1..g {
            pl.free_east(idx)?;
        }
        pl.place_extra_frees(&staged)?;
        pl.decorate_group(&caps_flags(&staged[..g]))?;
        for k in 0..borrowed_run {
            pl.free_west(g + k)?;
        }
    }
    if pl.toks != target {
        return Err(Error::Factorization(format!("planner ended at {:?}, wanted {:?}", pl.toks, target)));
    }
    Ok((GeneratorWord(pl.word), pl.current))
}

fn caps_flags(toks: &[Tok]) -> Vec<bool> {
    toks.iter()
        .filter_map(|t| match t {
            Tok::Cap(d) => Some(*d),
            Tok::Free => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::evaluate_word;
    use crate::diagram::{enumerate_diagrams, generator_u};

    #[test]
    fn u1_is_u1() {
        let w = factorize(&generator_u(1, 3).unwrap()).unwrap();
        assert_eq!(w.to_string(), "U1");
    }

    #[test]
    fn three_strand_words() {
        let a = Alphabet::new(3).unwrap();
        let d = single_diagram(&a.evaluate(&"U1 U2".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(factorize(&d).unwrap().to_string(), "U1*U2");
        let d = single_diagram(&a.evaluate(&"U1 beta".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(factorize(&d).unwrap().to_string(), "U1*beta");
    }

    #[test]
    fn round_trip_small() {
        for m in 3..=6 {
            let a = Alphabet::new(m).unwrap();
            for d in enumerate_diagrams(m, 9).unwrap() {
                let w = factorize_with(&a, &d).unwrap_or_else(|e| panic!("{d}: {e}"));
                assert!(evaluate_word(&w, m).unwrap().is_diagram(&d));
            }
        }
    }
}
