//! Virtual link diagrams as oriented signed Gauss codes.
//!
//! A diagram is a list of components, each a cyclic sequence of passages
//! `(crossing, over/under, sign)`. Virtual crossings are never materialized:
//! any code with every crossing appearing once over and once under (equal
//! signs) is accepted as the virtual closure of some diagram.
//!
//! Smoothing conventions. A splitting is oriented (the Seifert smoothing)
//! exactly when (sign, choice) is (+, A) or (-, B); it reconnects in-to-out
//! and the traversal keeps its direction. The disoriented splitting
//! reconnects in-to-in and out-to-out, reversing the traversal, and puts
//! one arrow on each of its two arcs following the counterclockwise
//! orientation at the crossing: on a positive crossing both arrows point
//! from the under-strand port of their arc to the over-strand port, on a
//! negative crossing the other way. The geometric reading behind this is
//! checked against an explicit planar port layout in the tests.

pub mod moves;

use crate::polyring::{LaurentPoly, Monomial, PolyError, Var};
use crate::ribbon::{reduce_arrow_word, ArrowDir, Sign};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("gauss code parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("crossing {0} occurs {1} times, expected exactly 2")]
    OccurrenceCount(u32, usize),
    #[error("crossing {0} must appear once over and once under")]
    RoleMismatch(u32),
    #[error("crossing {0} has inconsistent signs")]
    SignMismatch(u32),
    #[error("no crossing {0} in diagram")]
    UnknownCrossing(u32),
    #[error("move does not match the diagram at the given location: {0}")]
    MoveLocation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.role {
            Role::Over => 'O',
            Role::Under => 'U',
        };
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{r}{}{s}", self.crossing)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualLinkDiagram {
    pub components: Vec<Vec<Passage>>,
}

impl fmt::Display for VirtualLinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&comps.join(" ; "))
    }
}

/// Assignment of a splitting to every classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitChoice {
    A,
    B,
}

impl SplitChoice {
    pub fn other(self) -> SplitChoice {
        match self {
            SplitChoice::A => SplitChoice::B,
            SplitChoice::B => SplitChoice::A,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitState {
    pub choice: BTreeMap<u32, SplitChoice>,
}

impl SplitState {
    pub fn count_a(&self) -> usize {
        self.choice
            .values()
            .filter(|c| **c == SplitChoice::A)
            .count()
    }
    pub fn count_b(&self) -> usize {
        self.choice.len() - self.count_a()
    }
}

/// A port of a classical crossing: which strand, entering or leaving.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Port {
    pub role: Role,
    pub incoming: bool,
}

/// One traversal of a smoothing arc by a state circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteVisit {
    pub crossing: u32,
    pub sign: Sign,
    pub choice: SplitChoice,
    pub entered: Port,
    pub exited: Port,
    /// The arrow emitted at a disoriented smoothing, relative to circle
    /// traversal; oriented smoothings emit none.
    pub arrow: Option<ArrowDir>,
}

#[derive(Debug, Clone, Default)]
pub struct StateCircle {
    pub visits: Vec<SiteVisit>,
}

impl StateCircle {
    pub fn arrow_word(&self) -> Vec<ArrowDir> {
        self.visits.iter().filter_map(|v| v.arrow).collect()
    }
}

/// The circles obtained by splitting every crossing according to a state.
#[derive(Debug, Clone)]
pub struct StateCircles {
    pub circles: Vec<StateCircle>,
}

impl StateCircles {
    pub fn delta(&self) -> usize {
        self.circles.len()
    }
}

/// True when the splitting keeps the strand orientations (the Seifert
/// smoothing at this crossing).
pub fn splitting_is_oriented(sign: Sign, choice: SplitChoice) -> bool {
    matches!(
        (sign, choice),
        (Sign::Plus, SplitChoice::A) | (Sign::Minus, SplitChoice::B)
    )
}

/// Tail port role of the counterclockwise arrow on a disoriented smoothing
/// arc: under-strand side on positive crossings, over-strand side on
/// negative ones.
pub(crate) fn disoriented_arrow_tail(sign: Sign) -> Role {
    match sign {
        Sign::Plus => Role::Under,
        Sign::Minus => Role::Over,
    }
}

impl VirtualLinkDiagram {
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Self, LinkError> {
        let d = VirtualLinkDiagram { components };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), LinkError> {
        let mut seen: BTreeMap<u32, Vec<Passage>> = BTreeMap::new();
        for comp in &self.components {
            for p in comp {
                seen.entry(p.crossing).or_default().push(*p);
            }
        }
        for (c, ps) in seen {
            if ps.len() != 2 {
                return Err(LinkError::OccurrenceCount(c, ps.len()));
            }
            if ps[0].role == ps[1].role {
                return Err(LinkError::RoleMismatch(c));
            }
            if ps[0].sign != ps[1].sign {
                return Err(LinkError::SignMismatch(c));
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> BTreeMap<u32, Sign> {
        let mut out = BTreeMap::new();
        for comp in &self.components {
            for p in comp {
                out.insert(p.crossing, p.sign);
            }
        }
        out
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings().len()
    }

    /// Writhe: the sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings()
            .values()
            .map(|s| match s {
                Sign::Plus => 1,
                Sign::Minus => -1,
            })
            .sum()
    }

    /// All 2^n states in a fixed (binary counter) order.
    pub fn states(&self) -> Vec<SplitState> {
        let crossings: Vec<u32> = self.crossings().keys().copied().collect();
        (0..(1usize << crossings.len()))
            .map(|mask| SplitState {
                choice: crossings
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        (
                            *c,
                            if mask >> i & 1 == 1 {
                                SplitChoice::B
                            } else {
                                SplitChoice::A
                            },
                        )
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn uniform_state(&self, choice: SplitChoice) -> SplitState {
        SplitState {
            choice: self.crossings().keys().map(|c| (*c, choice)).collect(),
        }
    }

    /// The Seifert state: the oriented smoothing at every crossing.
    pub fn seifert_state(&self) -> SplitState {
        SplitState {
            choice: self
                .crossings()
                .iter()
                .map(|(c, s)| {
                    (
                        *c,
                        match s {
                            Sign::Plus => SplitChoice::A,
                            Sign::Minus => SplitChoice::B,
                        },
                    )
                })
                .collect(),
        }
    }

    /// The all-disoriented state.
    pub fn disoriented_state(&self) -> SplitState {
        let mut s = self.seifert_state();
        for c in s.choice.values_mut() {
            *c = c.other();
        }
        s
    }

    /// Splits every crossing according to `state` and traces the resulting
    /// circles, recording the port pattern and emitted arrow at every
    /// smoothing-site visit.
    pub fn smooth(&self, state: &SplitState) -> StateCircles {
        // Directed diagram arcs: (component, index) is the arc leaving
        // passage `index` and entering passage `index+1` (cyclically).
        type Arc = (usize, usize);
        let mut partner: BTreeMap<(u32, Role), Arc> = BTreeMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for (pi, p) in comp.iter().enumerate() {
                partner.insert((p.crossing, p.role), (ci, pi));
            }
        }
        let mut circles = Vec::new();
        let mut visited: BTreeSet<Arc> = BTreeSet::new();
        for (ci, comp) in self.components.iter().enumerate() {
            if comp.is_empty() {
                // A zero-crossing component is a free circle.
                circles.push(StateCircle::default());
                continue;
            }
            for start_idx in 0..comp.len() {
                let start: Arc = (ci, start_idx);
                if visited.contains(&start) {
                    continue;
                }
                let mut circle = StateCircle::default();
                let mut cur = start;
                let mut fwd = true;
                loop {
                    visited.insert(cur);
                    // Travel along `cur`; the passage we meet next.
                    let comp_cur = &self.components[cur.0];
                    let m = comp_cur.len();
                    let p = if fwd {
                        comp_cur[(cur.1 + 1) % m]
                    } else {
                        comp_cur[cur.1]
                    };
                    let entered = Port {
                        role: p.role,
                        incoming: fwd,
                    };
                    let oriented = splitting_is_oriented(p.sign, state.choice[&p.crossing]);
                    // Disoriented arcs join like ports, oriented arcs join
                    // in-to-out.
                    let exited = Port {
                        role: p.role.other(),
                        incoming: entered.incoming != oriented,
                    };
                    let arrow = (!oriented).then(|| {
                        if entered.role == disoriented_arrow_tail(p.sign) {
                            ArrowDir::With
                        } else {
                            ArrowDir::Against
                        }
                    });
                    circle.visits.push(SiteVisit {
                        crossing: p.crossing,
                        sign: p.sign,
                        choice: state.choice[&p.crossing],
                        entered,
                        exited,
                        arrow,
                    });
                    // Continue on the partner strand.
                    let (qc, qi) = partner[&(p.crossing, p.role.other())];
                    let qm = self.components[qc].len();
                    let (next, next_fwd) = if exited.incoming {
                        (((qc, (qi + qm - 1) % qm)), false)
                    } else {
                        ((qc, qi), true)
                    };
                    cur = next;
                    fwd = next_fwd;
                    if cur == start && fwd {
                        break;
                    }
                }
                circles.push(circle);
            }
        }
        StateCircles { circles }
    }

    /// Kauffman bracket: `sum_s A^a(s) B^b(s) d^(delta(s)-1)`.
    pub fn kauffman_bracket(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for state in self.states() {
            let delta = self.smooth(&state).delta() as i64;
            let m = Monomial::var_pow(Var::CapA, 4 * state.count_a() as i64)
                .mul(&Monomial::var_pow(Var::CapB, 4 * state.count_b() as i64))
                .mul(&Monomial::var_pow(Var::SmallD, 4 * (delta - 1)));
            out.add_term(m, 1);
        }
        out
    }

    /// Arrow bracket: the Kauffman bracket refined by a K variable per
    /// state circle recording its surviving arrow count.
    pub fn arrow_bracket(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for state in self.states() {
            let circles = self.smooth(&state);
            let mut m = Monomial::var_pow(Var::CapA, 4 * state.count_a() as i64)
                .mul(&Monomial::var_pow(Var::CapB, 4 * state.count_b() as i64))
                .mul(&Monomial::var_pow(
                    Var::SmallD,
                    4 * (circles.delta() as i64 - 1),
                ));
            for circle in &circles.circles {
                let reduced = reduce_arrow_word(&circle.arrow_word());
                if reduced > 0 {
                    m = m.mul(&Monomial::var(Var::k_doubled(reduced as u64)));
                }
            }
            out.add_term(m, 1);
        }
        out
    }

    /// Normalized arrow polynomial
    /// `(-A^3)^(-w) <L>_A(A, 1/A, -A^2 - A^-2)`, an invariant of the
    /// underlying virtual link.
    pub fn normalized_arrow(&self) -> LaurentPoly {
        let bracket = self.arrow_bracket();
        let mut sigma: BTreeMap<Var, LaurentPoly> = BTreeMap::new();
        sigma.insert(Var::CapB, LaurentPoly::var_pow(Var::CapA, -4));
        sigma.insert(
            Var::SmallD,
            &(-&LaurentPoly::var_pow(Var::CapA, 8)) - &LaurentPoly::var_pow(Var::CapA, -8),
        );
        let w = self.writhe();
        let prefactor = LaurentPoly::from_monomial(
            Monomial::var_pow(Var::CapA, -12 * w),
            if w % 2 == 0 { 1 } else { -1 },
        );
        &prefactor
            * &bracket
                .substitute(&sigma)
                .expect("images are units or positive powers")
    }

    /// Jones polynomial via `A = t^(-1/4)`, `B = t^(1/4)`,
    /// `d = -t^(1/2) - t^(-1/2)` and the writhe prefactor.
    pub fn jones(&self) -> LaurentPoly {
        let bracket = self.kauffman_bracket();
        let mut sigma: BTreeMap<Var, LaurentPoly> = BTreeMap::new();
        sigma.insert(Var::CapA, LaurentPoly::var_pow(Var::SmallT, -1));
        sigma.insert(Var::CapB, LaurentPoly::var_pow(Var::SmallT, 1));
        sigma.insert(
            Var::SmallD,
            &(-&LaurentPoly::var_pow(Var::SmallT, 2)) - &LaurentPoly::var_pow(Var::SmallT, -2),
        );
        let w = self.writhe();
        let prefactor = LaurentPoly::from_monomial(
            Monomial::var_pow(Var::SmallT, 3 * w),
            if w % 2 == 0 { 1 } else { -1 },
        );
        &prefactor
            * &bracket
                .substitute(&sigma)
                .expect("images are units or positive powers")
    }
}

/// Parses the Gauss code text format: components separated by `;`,
/// whitespace-separated passages matching `[OU]<digits>[+-]`. The empty
/// string is the 0-crossing unknot.
pub fn parse_gauss(input: &str) -> Result<VirtualLinkDiagram, LinkError> {
    let mut components = Vec::new();
    let mut base = 0usize;
    for chunk in input.split(';') {
        let mut passages = Vec::new();
        let bytes = chunk.as_bytes();
        let mut i = 0usize;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            passages.push(parse_passage(&chunk[start..i], base + start)?);
        }
        base += chunk.len() + 1;
        components.push(passages);
    }
    VirtualLinkDiagram::new(components)
}

fn parse_passage(token: &str, pos: usize) -> Result<Passage, LinkError> {
    let err = |msg: &str| LinkError::Parse {
        pos,
        msg: format!("{msg} in {token:?}"),
    };
    let bytes = token.as_bytes();
    let role = match bytes.first() {
        Some(b'O') => Role::Over,
        Some(b'U') => Role::Under,
        _ => return Err(err("expected O or U")),
    };
    let sign = match bytes.last() {
        Some(b'+') => Sign::Plus,
        Some(b'-') => Sign::Minus,
        _ => return Err(err("expected trailing + or -")),
    };
    let digits = &token[1..token.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("expected crossing number"));
    }
    let crossing = digits.parse().map_err(|_| err("crossing id out of range"))?;
    Ok(Passage {
        crossing,
        role,
        sign,
    })
}

#[cfg(test)]
mod tests;
