use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{Claim, Params, Status, VerificationReport};
use crate::coloring::{
    classify_dyadic, member_e, member_e_by_coloring, member_e_by_weights, member_e_even,
    member_e_even_by_coloring, member_e_even_by_weights, member_f, member_f_by_coloring,
    member_f_by_weights, member_k, omega_tilde, plane_coloring, Color, SLabel,
};
use crate::expr::evaluate;
use crate::plmap::{components_at, fixed_dyadics, pi_ab, to_pl, BinaryWord, Dyadic, PLMap};
use crate::subgroup_tools::{decompose_e, e_generators};
use crate::trees::{enumerate_trees, GeneratorWord, Letter, TreeDiagram};

/// Every reduced diagram with at most `max_leaves` leaves, by leaf count and then
/// by the structural order of `(top, bottom)`.
pub fn enumerate_elements(max_leaves: usize) -> Vec<TreeDiagram> {
    let mut out = Vec::new();
    for n in 1..=max_leaves {
        let trees = enumerate_trees(n);
        for top in &trees {
            for bottom in &trees {
                let d =
                    TreeDiagram::unreduced(top.clone(), bottom.clone()).expect("same leaf count");
                if d.is_reduced() {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Interior dyadics with expansion length exactly `len`, in increasing order.
pub fn dyadics_of_length(len: usize) -> impl Iterator<Item = Dyadic> {
    let e = len as u32;
    (0..1u128 << e.saturating_sub(1))
        .map(move |k| Dyadic::new(2 * k + 1, e))
        .filter(move |_| len > 0)
}

/// Interior dyadics with expansion length `1..=max_len`, shortest first.
pub fn dyadics_up_to(max_len: usize) -> Vec<Dyadic> {
    (1..=max_len).flat_map(dyadics_of_length).collect()
}

fn word_of(t: Dyadic) -> BinaryWord {
    t.to_word().expect("interior dyadic")
}

/// Distinct positive elements of word length `1..=max_len` over `x_0, …, x_{max_len}`,
/// each as its sorted index list (the positive normal form).
pub fn positive_elements(max_len: usize) -> Vec<Vec<u32>> {
    let gens = max_len as u32;
    let mut all = BTreeSet::new();
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::from([Vec::new()]);
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for l in &level {
            for n in 0..=gens {
                // x_l x_n = x_n x_{l+1} for l > n
                let mut v: Vec<u32> = l.iter().copied().filter(|&i| i <= n).collect();
                v.push(n);
                v.extend(l.iter().filter(|&&i| i > n).map(|i| i + 1));
                next.insert(v);
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.into_iter().collect()
}

fn exponents_of(v: &[u32]) -> Vec<u32> {
    let mut e = vec![0; v.last().map_or(0, |&m| m as usize + 1)];
    for &i in v {
        e[i as usize] += 1;
    }
    e
}

fn word_from_indices(v: &[u32]) -> GeneratorWord {
    GeneratorWord(
        v.iter()
            .map(|&index| Letter { index, exponent: 1 })
            .collect(),
    )
}

/// Among non-trivial positive elements, only powers of `x_0` are plane-colorable and
/// none is strip-colorable.
pub fn check_positive_elements(max_len: usize) -> VerificationReport {
    let elems = positive_elements(max_len);
    let results: Vec<(bool, bool, bool)> = elems
        .par_iter()
        .map(|v| {
            let d = TreeDiagram::positive(&exponents_of(v));
            (v.iter().all(|&i| i == 0), member_e(&d), member_f(&d))
        })
        .collect();
    let mut r = VerificationReport::new(
        "positive",
        Params {
            max_leaves: 0,
            max_depth: max_len,
        },
    );
    let bad_e = elems.iter().zip(&results).find(|(_, (pow, e, _))| pow != e);
    let bad_f = elems.iter().zip(&results).find(|(_, (_, _, f))| *f);
    let identity = TreeDiagram::identity();
    let mut c = Claim::check(
        "positive.E_is_powers_of_x0",
        "F_+ ∩ E = {x_0^n | n ≥ 0}",
        bad_e.is_none() && member_e(&identity),
    );
    if let Some((v, _)) = bad_e {
        c = c.with_witness(word_from_indices(v).to_string());
    }
    r.push(c);
    let mut c = Claim::check(
        "positive.F_is_trivial",
        "no non-trivial positive elements in the 3-colorable subgroup",
        bad_f.is_none() && member_f(&identity),
    );
    if let Some((v, _)) = bad_f {
        c = c.with_witness(word_from_indices(v).to_string());
    }
    r.push(c);
    r.push(
        Claim::new(
            "positive.count",
            "distinct positive elements enumerated",
            Status::Witness,
        )
        .with_witness(elems.len().to_string()),
    );
    r
}

/// Points reachable from `start` by words of length at most `depth` in `gens` and
/// their inverses. Points whose expansion is longer than `max_len` are discarded.
pub fn orbit_bfs(
    start: Dyadic,
    gens: &[TreeDiagram],
    depth: usize,
    max_len: Option<usize>,
) -> BTreeSet<Dyadic> {
    let maps: Vec<PLMap> = gens
        .iter()
        .flat_map(|g| [to_pl(g), to_pl(&g.inverse())])
        .collect();
    let mut seen = BTreeSet::from([start]);
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for t in &frontier {
            for m in &maps {
                let s = m.evaluate(*t);
                if max_len.is_some_and(|l| s.exponent() as usize > l) {
                    continue;
                }
                if seen.insert(s) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

/// One row of the table of elements moving dyadics between weight classes.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub element: &'static str,
    pub input: &'static str,
    pub output: &'static str,
    pub input_labels: Vec<SLabel>,
    pub output_labels: Vec<SLabel>,
}

fn s(primed: bool, i: u8, h: u8) -> SLabel {
    SLabel::new(primed, i, h)
}

/// The thirteen rows as printed, labels included.
pub fn transitivity_table() -> Vec<TableRow> {
    let y = "inv(x0 * phiR(w1))";
    let row = |element, input, il: Vec<SLabel>, output, ol: Vec<SLabel>| TableRow {
        element,
        input,
        output,
        input_labels: il,
        output_labels: ol,
    };
    vec![
        row(
            "x0",
            ".11",
            vec![s(false, 0, 2)],
            ".111",
            vec![s(true, 2, 2)],
        ),
        row(
            y,
            ".11",
            vec![s(false, 0, 2)],
            ".01101",
            vec![s(true, 1, 1)],
        ),
        row(
            "x0",
            ".101",
            vec![s(true, 1, 2)],
            ".1101",
            vec![s(false, 1, 2)],
        ),
        row(
            "x0",
            ".100011",
            vec![s(false, 2, 2)],
            ".1100011",
            vec![s(true, 0, 2)],
        ),
        row(
            "x0",
            ".0011",
            vec![s(false, 0, 1)],
            ".011",
            vec![s(true, 0, 1)],
        ),
        row(
            "x0",
            ".011",
            vec![s(true, 0, 1)],
            ".101",
            vec![s(true, 1, 2)],
        ),
        row(
            "x0",
            ".0001",
            vec![s(false, 1, 1)],
            ".001",
            vec![s(true, 2, 1)],
        ),
        row(
            "x0^2",
            ".001",
            vec![s(true, 2, 1)],
            ".1",
            vec![s(true, 2, 1), s(true, 2, 2)],
        ),
        row(
            "x0",
            ".1101",
            vec![s(false, 1, 2)],
            ".11101",
            vec![s(true, 2, 2)],
        ),
        row(
            "x0",
            ".00101",
            vec![s(true, 1, 1)],
            ".0101",
            vec![s(false, 2, 1)],
        ),
        row(
            "x0",
            ".01101",
            vec![s(true, 1, 1)],
            ".10101",
            vec![s(true, 0, 2)],
        ),
        row(
            "x0",
            ".0101",
            vec![s(false, 2, 1)],
            ".1001",
            vec![s(false, 0, 2)],
        ),
        row(
            "x0",
            ".010011",
            vec![s(false, 1, 1)],
            ".100011",
            vec![s(false, 2, 2)],
        ),
    ]
}

fn labels_of(t: Dyadic) -> Vec<SLabel> {
    let mut v = classify_dyadic(t).expect("interior").labels();
    v.sort();
    v
}

fn fmt_labels(v: &[SLabel]) -> String {
    v.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join("∩")
}

/// Applies each row's element, then checks the action and both class labels.
pub fn verify_transitivity_table() -> VerificationReport {
    let mut r = VerificationReport::new(
        "table",
        Params {
            max_leaves: 0,
            max_depth: 0,
        },
    );
    for (i, row) in transitivity_table().iter().enumerate() {
        let n = i + 1;
        let g = evaluate(row.element).expect("table elements parse");
        let input: Dyadic = row.input.parse().expect("table dyadic");
        let expected: Dyadic = row.output.parse().expect("table dyadic");
        let got = to_pl(&g).evaluate(input);
        let mut c = Claim::check(
            format!("table.row{n:02}.action"),
            format!("{}({}) = {}", row.element, row.input, row.output),
            got == expected && member_e(&g),
        );
        if got != expected {
            c = c.with_witness(format!("computed {got}"));
        }
        r.push(c);

        let mut stated_in = row.input_labels.clone();
        stated_in.sort();
        let mut stated_out = row.output_labels.clone();
        stated_out.sort();
        let (cin, cout) = (labels_of(input), labels_of(got));
        let ok = cin == stated_in && cout == stated_out;
        let mut c = Claim::check(
            format!("table.row{n:02}.classes"),
            format!(
                "{} ∋ {} → {} ∈ {}",
                fmt_labels(&stated_in),
                row.input,
                row.output,
                fmt_labels(&stated_out)
            ),
            ok,
        );
        if !ok {
            c = c.with_witness(format!(
                "computed {} → {}",
                fmt_labels(&cin),
                fmt_labels(&cout)
            ));
        }
        r.push(c);
    }
    r
}

/// For each `i`, the first dyadic `t` (shortest, then smallest) with `ω̃(t) = i` and
/// `ω̃(d(t)) ≠ i`, searching expansions up to `max_depth` digits.
pub fn stab_witnesses(d: &TreeDiagram, max_depth: usize) -> [Option<Dyadic>; 3] {
    let m = to_pl(d);
    let mut out = [None; 3];
    for t in (1..=max_depth).flat_map(dyadics_of_length) {
        let i = omega_tilde(&word_of(t));
        let slot = &mut out[i.value() as usize];
        if slot.is_none() && omega_tilde(&word_of(m.evaluate(t))) != i {
            *slot = Some(t);
            if out.iter().all(Option::is_some) {
                break;
            }
        }
    }
    out
}

pub fn stab_witness(d: &TreeDiagram, i: Color, max_depth: usize) -> Option<Dyadic> {
    stab_witnesses(d, max_depth)[i.value() as usize]
}

fn fmt_witnesses(w: &[Option<Dyadic>; 3]) -> String {
    w.iter()
        .enumerate()
        .map(|(i, t)| match t {
            Some(t) => format!("Z{i}:{t}"),
            None => format!("Z{i}:-"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Members of the even part move no `Z_i`; other elements of `K_(2,2)` should move one.
pub fn check_stab_equivalence(max_leaves: usize, max_depth: usize) -> VerificationReport {
    let elems = enumerate_elements(max_leaves);
    let rows: Vec<(bool, bool, [Option<Dyadic>; 3])> = elems
        .par_iter()
        .map(|d| {
            (
                member_e_even(d),
                member_k(d, 2, 2),
                stab_witnesses(d, max_depth),
            )
        })
        .collect();
    let mut r = VerificationReport::new(
        "stab",
        Params {
            max_leaves,
            max_depth,
        },
    );

    let bad = elems
        .iter()
        .zip(&rows)
        .find(|(_, (m, _, w))| *m && w.iter().any(Option::is_some));
    let members = rows.iter().filter(|(m, _, _)| *m).count();
    let mut c = Claim::check(
        "stab.members_preserve_all_Z",
        "E_even ⊆ ∩ Stab(Z_i)",
        bad.is_none(),
    )
    .with_witness(format!("{members} members checked"));
    if let Some((d, (_, _, w))) = bad {
        c = c.with_witness(format!("{d} moves {}", fmt_witnesses(w)));
    }
    r.push(c);

    let outside: Vec<_> = elems
        .iter()
        .zip(&rows)
        .filter(|(_, (m, k, _))| !*m && *k)
        .collect();
    let unwitnessed: Vec<_> = outside
        .iter()
        .filter(|(_, (_, _, w))| w.iter().all(Option::is_none))
        .collect();
    let deepest = outside
        .iter()
        .filter_map(|(_, (_, _, w))| w.iter().flatten().map(|t| t.exponent()).min())
        .max()
        .unwrap_or(0);
    let c = match unwitnessed.first() {
        None => Claim::new(
            "stab.nonmembers_have_witness",
            "K_(2,2) ∖ E_even moves some Z_i",
            Status::Pass,
        )
        .with_witness(format!(
            "{} non-members, deepest first witness at length {deepest}",
            outside.len()
        )),
        Some((d, _)) => Claim::new(
            "stab.nonmembers_have_witness",
            "K_(2,2) ∖ E_even moves some Z_i",
            Status::Inconclusive,
        )
        .with_witness(format!(
            "{} without witness up to depth {max_depth}, first {d}",
            unwitnessed.len()
        )),
    };
    r.push(c);
    r.extend(stab_separators(max_depth));
    r
}

/// The three elements separating the individual stabilisers: each moves exactly
/// two of the classes.
pub fn stab_separators(max_depth: usize) -> VerificationReport {
    let mut r = VerificationReport::new(
        "stab",
        Params {
            max_leaves: 0,
            max_depth,
        },
    );
    let cases = [
        (
            "x1^2",
            2usize,
            "x_1^2 ∈ Stab(Z_2) ∖ (Stab(Z_0) ∪ Stab(Z_1))",
        ),
        ("x2^2", 1, "x_2^2 ∈ Stab(Z_1) ∖ (Stab(Z_0) ∪ Stab(Z_2))"),
        (
            "x0 x1 x2^-1 x1^-1",
            0,
            "x_0x_1x_2^{-1}x_1^{-1} ∈ Stab(Z_0) ∖ (Stab(Z_1) ∪ Stab(Z_2))",
        ),
    ];
    for (expr, kept, claim) in cases {
        let d = evaluate(expr).expect("separator parses");
        let w = stab_witnesses(&d, max_depth);
        let ok = (0..3).all(|i| w[i].is_none() == (i == kept)) && !member_e_even(&d);
        r.push(
            Claim::check(
                format!("stab.separator.{}", expr.replace(' ', "")),
                claim,
                ok,
            )
            .with_witness(fmt_witnesses(&w)),
        );
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    E,
    EEven,
    F,
}

impl Subgroup {
    pub fn contains(self, d: &TreeDiagram) -> bool {
        match self {
            Subgroup::E => member_e(d),
            Subgroup::EEven => member_e_even(d),
            Subgroup::F => member_f(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::E => "E",
            Subgroup::EEven => "Eeven",
            Subgroup::F => "F3col",
        }
    }
}

/// Fixed dyadics used as split points: isolated fixed points, plus the interior
/// endpoints of fixed intervals and the leaf boundaries of the top tree inside them.
pub fn split_points(d: &TreeDiagram) -> Vec<Dyadic> {
    let fs = fixed_dyadics(d);
    let mut pts: BTreeSet<Dyadic> = fs.points.into_iter().collect();
    let bounds: Vec<Dyadic> = d
        .top()
        .leaf_words()
        .iter()
        .map(BinaryWord::to_dyadic)
        .collect();
    for (a, b) in fs.intervals {
        pts.insert(a);
        pts.insert(b);
        pts.extend(bounds.iter().copied().filter(|&x| a <= x && x <= b));
    }
    pts.into_iter().filter(Dyadic::is_interior).collect()
}

/// Both components of every member at every split point are members.
pub fn check_closed(sub: Subgroup, max_leaves: usize) -> VerificationReport {
    let elems: Vec<TreeDiagram> = enumerate_elements(max_leaves)
        .into_par_iter()
        .filter(|d| sub.contains(d))
        .collect();
    let results: Vec<(usize, Option<String>)> = elems
        .par_iter()
        .map(|d| {
            let pts = split_points(d);
            for &a in &pts {
                let (g1, g2) = components_at(d, a).expect("split points are fixed");
                if !sub.contains(&g1) || !sub.contains(&g2) || g1.multiply(&g2) != *d {
                    return (pts.len(), Some(format!("{d} at {a}")));
                }
            }
            (pts.len(), None)
        })
        .collect();
    let cases: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<&String> = results.iter().filter_map(|r| r.1.as_ref()).collect();
    let mut r = VerificationReport::new(
        "closure",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    let mut c = Claim::check(
        format!("closure.{}", sub.name()),
        format!("{} is closed", sub.name()),
        bad.is_empty(),
    )
    .with_witness(format!("{} members, {cases} split points", elems.len()));
    if let Some(w) = bad.first() {
        c = c.with_witness(format!("{} members split outside, first {w}", bad.len()));
    }
    r.push(c);
    r
}

/// Members of `ℰ ∖ ℰ_even` fix no dyadic in `(0, 1)`.
pub fn check_no_fixed_dyadics(max_leaves: usize) -> VerificationReport {
    let odd: Vec<TreeDiagram> = enumerate_elements(max_leaves)
        .into_par_iter()
        .filter(|d| member_e(d) && !member_e_even(d))
        .collect();
    let bad: Vec<&TreeDiagram> = odd
        .iter()
        .filter(|d| {
            let fs = fixed_dyadics(d);
            !fs.points.is_empty() || !fs.intervals.is_empty()
        })
        .collect();
    let mut r = VerificationReport::new(
        "closure",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    let mut c = Claim::check(
        "closure.odd_members_fix_no_dyadic",
        "elements of E ∖ E_even do not fix any dyadic rational",
        bad.is_empty(),
    )
    .with_witness(format!("{} odd members", odd.len()));
    if let Some(d) = bad.first() {
        let fs = fixed_dyadics(d);
        let pts: Vec<String> = fs.points.iter().map(|p| p.to_string()).collect();
        c = c.with_witness(format!(
            "{} fix a dyadic, first {d} fixing {}",
            bad.len(),
            pts.join(",")
        ));
    }
    r.push(c);
    r
}

/// Reach of the `ℰ` generators from `.1`: every dyadic with expansion length at most
/// `target_len` should appear within `depth` steps. Intermediate points are limited
/// to expansions of length `max_len`.
pub fn check_orbit_coverage(target_len: usize, depth: usize, max_len: usize) -> VerificationReport {
    let orbit = orbit_bfs(Dyadic::HALF, &e_generators(false), depth, Some(max_len));
    let missing: Vec<Dyadic> = dyadics_up_to(target_len)
        .into_iter()
        .filter(|t| !orbit.contains(t))
        .collect();
    let mut r = VerificationReport::new(
        "orbit",
        Params {
            max_leaves: 0,
            max_depth: depth,
        },
    );
    let mut c = Claim::check(
        "orbit.E_transitive",
        "E acts transitively on the dyadic rationals",
        missing.is_empty(),
    )
    .with_witness(format!(
        "{} of {} reached",
        (1usize << target_len) - 1 - missing.len(),
        (1usize << target_len) - 1
    ));
    if !missing.is_empty() {
        let in_z0 = missing
            .iter()
            .filter(|t| omega_tilde(&word_of(**t)) == Color::ZERO)
            .count();
        c = c.with_witness(format!(
            "{} unreached, {in_z0} of them with ω̃ = 0, first {}",
            missing.len(),
            missing[0]
        ));
    }
    r.push(c);
    let z0_closed = orbit
        .iter()
        .all(|t| omega_tilde(&word_of(*t)) != Color::ZERO);
    r.push(Claim::new(
        "orbit.Z0_avoided",
        "ω̃ = 0 is never reached from .1",
        if z0_closed {
            Status::Witness
        } else {
            Status::Inconclusive
        },
    ));
    r
}

/// No member of `ℰ` has endpoint slope exponents of different parity.
pub fn check_parity_proposition(max_leaves: usize) -> VerificationReport {
    let bad = enumerate_elements(max_leaves)
        .into_par_iter()
        .find_first(|d| {
            let (a, b) = pi_ab(d);
            member_e(d) && (a - b).rem_euclid(2) != 0
        });
    let mut r = VerificationReport::new(
        "parity",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    let mut c = Claim::check(
        "parity.E_avoids_K21_minus_K22",
        "E ∩ (K_(2,1) ∖ K_(2,2)) = ∅",
        bad.is_none(),
    );
    if let Some(d) = bad {
        c = c.with_witness(d.to_string());
    }
    r.push(c);
    r
}

/// In the even case the bottom root colors are (0, 1), in the odd case (0, 2).
pub fn check_root_colors(max_leaves: usize) -> VerificationReport {
    let bad = enumerate_elements(max_leaves)
        .into_par_iter()
        .find_first(|d| {
            let Some(col) = plane_coloring(d) else {
                return false;
            };
            if d.bottom().is_leaf() {
                return false;
            }
            let (a, b) = pi_ab(d);
            let expected = match (a.rem_euclid(2), b.rem_euclid(2)) {
                (0, 0) => Color::ONE,
                (1, 1) => Color::TWO,
                _ => return true,
            };
            col.bottom.outer != Color::ZERO || col.bottom.inner != expected
        });
    let mut r = VerificationReport::new(
        "parity",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    let mut c = Claim::check(
        "parity.root_colors",
        "bottom root colors are (0,1) for even and (0,2) for odd members of E",
        bad.is_none(),
    );
    if let Some(d) = bad {
        c = c.with_witness(d.to_string());
    }
    r.push(c);
    r
}

/// Every member of `ℰ` factors as `x_0^a φ_R(f) x_0^{-b}` with `f` strip-colorable.
pub fn check_decomposition(max_leaves: usize) -> VerificationReport {
    let mut r = VerificationReport::new(
        "decompose",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    for (even, id, claim) in [
        (false, "decompose.E", "E = ⟨x_0, φ_R(F3col)⟩"),
        (true, "decompose.Eeven", "E_even = ⟨x_0^2, φ_R(F3col)⟩"),
    ] {
        let members: Vec<TreeDiagram> = enumerate_elements(max_leaves)
            .into_par_iter()
            .filter(|d| if even { member_e_even(d) } else { member_e(d) })
            .collect();
        let bad = members
            .par_iter()
            .find_first(|d| match decompose_e(d, even) {
                Ok(dec) => {
                    dec.rebuild() != **d
                        || !member_f(&dec.f)
                        || (even && (dec.a % 2 != 0 || dec.b % 2 != 0))
                }
                Err(_) => true,
            });
        let mut c = Claim::check(id, claim, bad.is_none())
            .with_witness(format!("{} members", members.len()));
        if let Some(d) = bad {
            c = c.with_witness(d.to_string());
        }
        r.push(c);
    }
    r
}

/// Weight-based and coloring-based membership agree.
pub fn check_oracle_agreement(max_leaves: usize) -> VerificationReport {
    type Pair = (fn(&TreeDiagram) -> bool, fn(&TreeDiagram) -> bool);
    let preds: [(&str, Pair); 3] = [
        ("F3col", (member_f_by_coloring, member_f_by_weights)),
        ("E", (member_e_by_coloring, member_e_by_weights)),
        (
            "Eeven",
            (member_e_even_by_coloring, member_e_even_by_weights),
        ),
    ];
    let elems = enumerate_elements(max_leaves);
    let mut r = VerificationReport::new(
        "oracles",
        Params {
            max_leaves,
            max_depth: 0,
        },
    );
    for (name, (a, b)) in preds {
        let bad = elems.par_iter().find_first(|d| a(d) != b(d));
        let mut c = Claim::check(
            format!("oracles.{name}"),
            format!("coloring and weight criteria for {name} agree"),
            bad.is_none(),
        )
        .with_witness(format!("{} elements", elems.len()));
        if let Some(d) = bad {
            c = c.with_witness(d.to_string());
        }
        r.push(c);
    }
    r
}

/// `x_0 g x_0^{-1}` stays in the even part for every even generator and its inverse.
pub fn check_conjugation() -> VerificationReport {
    let x0 = TreeDiagram::generator(0);
    let gens: Vec<TreeDiagram> = e_generators(true)
        .into_iter()
        .flat_map(|g| [g.inverse(), g])
        .collect();
    let bad = gens
        .iter()
        .find(|g| !member_e_even(&x0.multiply(g).multiply(&x0.inverse())));
    let mut r = VerificationReport::new(
        "conjugation",
        Params {
            max_leaves: 0,
            max_depth: 0,
        },
    );
    let mut c = Claim::check(
        "conjugation.x0_normalises_Eeven_generators",
        "x_0 E_even x_0^{-1} = E_even",
        bad.is_none(),
    );
    if let Some(g) = bad {
        c = c.with_witness(g.to_string());
    }
    r.push(c);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_elements(1), vec![TreeDiagram::identity()]);
        assert_eq!(enumerate_elements(2).len(), 1);
        let three = enumerate_elements(3);
        let x0 = TreeDiagram::generator(0);
        assert_eq!(three.len(), 3);
        assert!(three.contains(&x0) && three.contains(&x0.inverse()));
    }

    #[test]
    fn symbolic_positive_elements_match_brute_force() {
        let max = 3u32;
        let mut brute = BTreeSet::new();
        for len in 1..=max as usize {
            for w in (0..len).map(|_| 0..=max).multi_cartesian_product() {
                brute.insert(TreeDiagram::from_word(&word_from_indices(&w)));
            }
        }
        let symbolic: BTreeSet<TreeDiagram> = positive_elements(max as usize)
            .iter()
            .map(|v| TreeDiagram::from_word(&word_from_indices(v)))
            .collect();
        assert_eq!(symbolic, brute);
        assert_eq!(symbolic.len(), positive_elements(max as usize).len());
        for v in positive_elements(4) {
            assert_eq!(
                TreeDiagram::positive(&exponents_of(&v)),
                TreeDiagram::from_word(&word_from_indices(&v))
            );
        }
    }

    #[test]
    fn dyadic_grid() {
        let v: Vec<String> = dyadics_up_to(2).iter().map(|t| t.to_string()).collect();
        assert_eq!(v, [".1", ".01", ".11"]);
        assert_eq!(dyadics_up_to(6).len(), 63);
    }

    #[test]
    fn orbit_examples() {
        let half = Dyadic::HALF;
        let x0 = TreeDiagram::generator(0);
        assert!(orbit_bfs(half, &[x0], 1, None).contains(&".11".parse().unwrap()));
        assert_eq!(orbit_bfs(half, &[], 5, None), BTreeSet::from([half]));
    }

    #[test]
    fn stab_separator_examples() {
        let x1sq = evaluate("x1^2").unwrap();
        assert!(stab_witness(&x1sq, Color::ZERO, 8).is_some());
        assert!(stab_witness(&x1sq, Color::TWO, 12).is_none());
        let g = evaluate("x0 x1 x2^-1 x1^-1").unwrap();
        assert_eq!(
            stab_witness(&g, Color::TWO, 8),
            Some(".01".parse().unwrap())
        );
        assert!(stab_witness(&TreeDiagram::identity(), Color::ONE, 10).is_none());
    }
}
