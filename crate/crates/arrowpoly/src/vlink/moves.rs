//! Reidemeister rewrites on Gauss codes.
//!
//! R1 inserts or removes a kink (two adjacent passages of one crossing).
//! R2 inserts or removes a clasp: an adjacent over-over pair matched by an
//! adjacent under-under pair with opposite signs. R3 slides a strand across
//! a crossing: three pairwise-adjacent passage pairs swap simultaneously;
//! an instance is accepted only when the over/under pattern is consistent
//! with stacking three strands (no cyclic over-relation) and the signs
//! match the strand directions read off the pair orders. Virtual moves do
//! not change the code at all.

use super::{LinkError, Passage, Role, VirtualLinkDiagram};
use crate::ribbon::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    R1Insert {
        component: usize,
        pos: usize,
        sign: Sign,
        over_first: bool,
    },
    /// Removes the kink whose first passage sits at `pos` (cyclically
    /// adjacent to `pos + 1`).
    R1Remove { component: usize, pos: usize },
    R2Insert {
        comp_over: usize,
        pos_over: usize,
        comp_under: usize,
        pos_under: usize,
        sign: Sign,
        /// Under passages in the same order as the over passages.
        parallel: bool,
    },
    /// Removes the clasp formed by two crossings.
    R2Remove { a: u32, b: u32 },
    R3(R3Site),
    /// Virtual Reidemeister moves leave the Gauss code untouched.
    Virtual,
}

/// Three adjacent passage pairs, each given by the position of its first
/// passage; the second is the cyclic successor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct R3Site {
    pub pairs: [(usize, usize); 3],
}

fn fresh_crossing_ids(d: &VirtualLinkDiagram, n: u32) -> Vec<u32> {
    let max = d.crossings().keys().max().copied().unwrap_or(0);
    (1..=n).map(|i| max + i).collect()
}

fn cyclic_pair(len: usize, first: usize) -> (usize, usize) {
    (first, (first + 1) % len)
}

/// Applies a rewrite, returning the new diagram.
pub fn apply_move(d: &VirtualLinkDiagram, mv: &Move) -> Result<VirtualLinkDiagram, LinkError> {
    let bad = |msg: String| LinkError::MoveLocation(msg);
    let mut out = d.clone();
    match mv {
        Move::Virtual => {}
        Move::R1Insert {
            component,
            pos,
            sign,
            over_first,
        } => {
            let c = fresh_crossing_ids(d, 1)[0];
            let comp = out
                .components
                .get_mut(*component)
                .ok_or_else(|| bad(format!("no component {component}")))?;
            if *pos > comp.len() {
                return Err(bad(format!("position {pos} out of range")));
            }
            let (r1, r2) = if *over_first {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            comp.insert(*pos, Passage { crossing: c, role: r2, sign: *sign });
            comp.insert(*pos, Passage { crossing: c, role: r1, sign: *sign });
        }
        Move::R1Remove { component, pos } => {
            let comp = out
                .components
                .get_mut(*component)
                .ok_or_else(|| bad(format!("no component {component}")))?;
            let m = comp.len();
            if m < 2 || *pos >= m {
                return Err(bad("kink position out of range".into()));
            }
            let (i, j) = cyclic_pair(m, *pos);
            if comp[i].crossing != comp[j].crossing {
                return Err(bad("passages at the location belong to different crossings".into()));
            }
            let mut idx = [i, j];
            idx.sort_unstable();
            comp.remove(idx[1]);
            comp.remove(idx[0]);
        }
        Move::R2Insert {
            comp_over,
            pos_over,
            comp_under,
            pos_under,
            sign,
            parallel,
        } => {
            let ids = fresh_crossing_ids(d, 2);
            let (a, b) = (ids[0], ids[1]);
            let overs = [
                Passage { crossing: a, role: Role::Over, sign: *sign },
                Passage { crossing: b, role: Role::Over, sign: sign.flip() },
            ];
            let mut unders = [
                Passage { crossing: a, role: Role::Under, sign: *sign },
                Passage { crossing: b, role: Role::Under, sign: sign.flip() },
            ];
            if !parallel {
                unders.swap(0, 1);
            }
            for (comp, pos) in [(comp_over, pos_over), (comp_under, pos_under)] {
                let c = out
                    .components
                    .get(*comp)
                    .ok_or_else(|| bad(format!("no component {comp}")))?;
                if *pos > c.len() {
                    return Err(bad(format!("position {pos} out of range")));
                }
            }
            if comp_over == comp_under {
                if pos_over == pos_under {
                    return Err(bad("clasp sites must be distinct gaps".into()));
                }
                // Insert at the larger gap first so indices stay valid.
                let comp = &mut out.components[*comp_over];
                if pos_over > pos_under {
                    comp.splice(*pos_over..*pos_over, overs);
                    comp.splice(*pos_under..*pos_under, unders);
                } else {
                    comp.splice(*pos_under..*pos_under, unders);
                    comp.splice(*pos_over..*pos_over, overs);
                }
            } else {
                out.components[*comp_over].splice(*pos_over..*pos_over, overs);
                out.components[*comp_under].splice(*pos_under..*pos_under, unders);
            }
        }
        Move::R2Remove { a, b } => {
            let site = find_r2_removals(d)
                .into_iter()
                .find(|(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
                .ok_or_else(|| bad(format!("crossings {a},{b} do not form a clasp")))?;
            let (a, b) = site;
            for comp in &mut out.components {
                comp.retain(|p| p.crossing != a && p.crossing != b);
            }
        }
        Move::R3(site) => {
            if !find_r3_sites(d).contains(site) {
                return Err(bad("not a slide-consistent triple".into()));
            }
            for (comp, first) in site.pairs {
                let m = out.components[comp].len();
                let (i, j) = cyclic_pair(m, first);
                out.components[comp].swap(i, j);
            }
        }
    }
    out.validate()?;
    Ok(out)
}

/// Positions of removable kinks: cyclically adjacent passages of the same
/// crossing.
pub fn find_r1_removals(d: &VirtualLinkDiagram) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (ci, comp) in d.components.iter().enumerate() {
        let m = comp.len();
        if m < 2 {
            continue;
        }
        for i in 0..m {
            let (a, b) = cyclic_pair(m, i);
            if comp[a].crossing == comp[b].crossing {
                out.push((ci, i));
            }
        }
    }
    out
}

/// Crossing pairs forming removable clasps: an adjacent same-role pair whose
/// partner passages are also adjacent, with opposite signs.
pub fn find_r2_removals(d: &VirtualLinkDiagram) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let adjacent = |x: u32, y: u32, role: Role| -> bool {
        for comp in &d.components {
            let m = comp.len();
            for i in 0..m {
                let (a, b) = cyclic_pair(m, i);
                if m >= 2
                    && comp[a].role == role
                    && comp[b].role == role
                    && ((comp[a].crossing == x && comp[b].crossing == y)
                        || (comp[a].crossing == y && comp[b].crossing == x))
                {
                    return true;
                }
            }
        }
        false
    };
    let crossings = d.crossings();
    let ids: Vec<u32> = crossings.keys().copied().collect();
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            if crossings[&x] == crossings[&y].flip()
                && adjacent(x, y, Role::Over)
                && adjacent(x, y, Role::Under)
            {
                out.push((x, y));
            }
        }
    }
    out
}

/// All slide-consistent triples of adjacent passage pairs.
pub fn find_r3_sites(d: &VirtualLinkDiagram) -> Vec<R3Site> {
    // Candidate adjacent pairs over two distinct crossings.
    struct Pair {
        comp: usize,
        first: usize,
        slots: [(usize, usize); 2],
        crossings: (u32, u32),
        roles: (Role, Role),
        signs: (Sign, Sign),
    }
    let mut pairs = Vec::new();
    for (ci, comp) in d.components.iter().enumerate() {
        let m = comp.len();
        if m < 2 {
            continue;
        }
        for i in 0..m {
            let (a, b) = cyclic_pair(m, i);
            if comp[a].crossing != comp[b].crossing {
                pairs.push(Pair {
                    comp: ci,
                    first: i,
                    slots: [(ci, a), (ci, b)],
                    crossings: (comp[a].crossing, comp[b].crossing),
                    roles: (comp[a].role, comp[b].role),
                    signs: (comp[a].sign, comp[b].sign),
                });
            }
        }
    }
    let mut sites = Vec::new();
    let n = pairs.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let trio = [&pairs[i], &pairs[j], &pairs[k]];
                // Six distinct slots.
                let mut slots: Vec<(usize, usize)> =
                    trio.iter().flat_map(|p| p.slots).collect();
                slots.sort_unstable();
                slots.dedup();
                if slots.len() != 6 {
                    continue;
                }
                if check_r3(trio).is_some() {
                    sites.push(R3Site {
                        pairs: [
                            (trio[0].comp, trio[0].first),
                            (trio[1].comp, trio[1].first),
                            (trio[2].comp, trio[2].first),
                        ],
                    });
                }
            }
        }
    }

    /// Validates the stacking and sign pattern; `Some(())` when the triple
    /// is a genuine slide.
    fn check_r3(trio: [&Pair; 3]) -> Option<()> {
        // The three crossing sets must form a triangle v-u, v-t, u-t.
        // Identify the labels from the shared crossings.
        let sets: Vec<(u32, u32)> = trio.iter().map(|p| p.crossings).collect();
        let mut all: Vec<u32> = sets.iter().flat_map(|&(a, b)| [a, b]).collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 3 {
            return None;
        }
        // Strand 1 meets v then u, strand 2 meets v then t, strand 3 meets
        // u then t; try every assignment of the three pairs to strands and
        // of crossings to v, u, t.
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for strand_perm in perms {
            let s: Vec<&Pair> = strand_perm.iter().map(|&x| trio[x]).collect();
            for vut in perms {
                let (v, u, t) = (all[vut[0]], all[vut[1]], all[vut[2]]);
                // Strand 1 carries {v,u}, strand 2 {v,t}, strand 3 {u,t}.
                let want = [(v, u), (v, t), (u, t)];
                let mut dirs = [true; 3];
                let mut ok = true;
                for (si, &(x, y)) in want.iter().enumerate() {
                    let got = s[si].crossings;
                    if got == (x, y) {
                        dirs[si] = true;
                    } else if got == (y, x) {
                        dirs[si] = false;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let role_of = |si: usize, c: u32| -> Role {
                    if s[si].crossings.0 == c {
                        s[si].roles.0
                    } else {
                        s[si].roles.1
                    }
                };
                let sign_of = |si: usize, c: u32| -> Sign {
                    if s[si].crossings.0 == c {
                        s[si].signs.0
                    } else {
                        s[si].signs.1
                    }
                };
                // Stacking: who is over at each crossing.
                let over_v_1 = role_of(0, v) == Role::Over; // strand1 vs strand2
                let over_u_1 = role_of(0, u) == Role::Over; // strand1 vs strand3
                let over_t_2 = role_of(1, t) == Role::Over; // strand2 vs strand3
                // Reject the two cyclic (non-stackable) patterns.
                let cyclic = (over_v_1 && !over_u_1 && over_t_2)
                    || (!over_v_1 && over_u_1 && !over_t_2);
                if cyclic {
                    continue;
                }
                // Signs forced by stacking and directions.
                let base = |plus: bool| if plus { 1i32 } else { -1 };
                let dir = |b: bool| if b { 1i32 } else { -1 };
                let expect = |b: i32| if b > 0 { Sign::Plus } else { Sign::Minus };
                let sv = base(over_v_1) * dir(dirs[0]) * dir(dirs[1]);
                let su = base(over_u_1) * dir(dirs[0]) * dir(dirs[2]);
                let st = base(over_t_2) * dir(dirs[1]) * dir(dirs[2]);
                if sign_of(0, v) == expect(sv)
                    && sign_of(0, u) == expect(su)
                    && sign_of(1, t) == expect(st)
                {
                    return Some(());
                }
            }
        }
        None
    }
    sites.sort_by_key(|s| s.pairs);
    sites.dedup();
    sites
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vlink::parse_gauss;

    #[test]
    fn r1_insert_then_remove_roundtrips() {
        let d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let mv = Move::R1Insert {
            component: 0,
            pos: 2,
            sign: Sign::Minus,
            over_first: false,
        };
        let d2 = apply_move(&d, &mv).unwrap();
        assert_eq!(d2.num_crossings(), 4);
        let back = apply_move(&d2, &Move::R1Remove { component: 0, pos: 2 }).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn r2_insert_then_remove_roundtrips() {
        let d = parse_gauss("O1+ U1+").unwrap();
        let mv = Move::R2Insert {
            comp_over: 0,
            pos_over: 1,
            comp_under: 0,
            pos_under: 2,
            sign: Sign::Plus,
            parallel: true,
        };
        let d2 = apply_move(&d, &mv).unwrap();
        assert_eq!(d2.num_crossings(), 3);
        let (a, b) = find_r2_removals(&d2)[0];
        let back = apply_move(&d2, &Move::R2Remove { a, b }).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn virtual_move_is_identity() {
        let d = parse_gauss("O1+ O2+ U1+ U2+").unwrap();
        assert_eq!(apply_move(&d, &Move::Virtual).unwrap(), d);
    }

    #[test]
    fn bad_location_is_rejected() {
        let d = parse_gauss("O1+ U1+").unwrap();
        assert!(apply_move(&d, &Move::R1Remove { component: 0, pos: 7 }).is_err());
        assert!(apply_move(
            &d,
            &Move::R2Remove { a: 1, b: 1 }
        )
        .is_err());
    }
}
