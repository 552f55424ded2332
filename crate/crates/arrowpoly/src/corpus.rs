//! Reference diagrams used across the test and verification suites.
//!
//! Chirality naming follows the bracket conventions of this crate: the
//! "left" trefoil is the closure of the positive 2-braid word, whose Jones
//! polynomial is `t + t^3 - t^4`; the all-negative code is its mirror.

use crate::vlink::{parse_gauss, VirtualLinkDiagram};

pub const UNKNOT: &str = "";
pub const KINK_POS: &str = "O1+ U1+";
pub const KINK_NEG: &str = "U1- O1-";
pub const DOUBLE_KINK: &str = "O1+ U1+ U2- O2-";
pub const LEFT_TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";
pub const RIGHT_TREFOIL: &str = "O1- U2- O3- U1- O2- U3-";
/// Closure of the 3-braid word (s1 s2^-1)^2.
pub const FIGURE_EIGHT: &str = "O1+ U2- O4- U1+ O3+ U4- O2- U3+";
/// Closure of the 2-braid word s1^2.
pub const HOPF_LINK: &str = "O1+ U2+ ; U1+ O2+";
pub const VIRTUAL_TREFOIL: &str = "O1+ O2+ U1+ U2+";
/// Two clasped 2-crossing tangles of opposite handedness; the classical
/// invariants are trivial on it while the arrow polynomial is not.
pub const KISHINO: &str = "O1+ U2+ U1+ O2+ O3- U4- U3- O4-";

fn parsed(code: &str) -> VirtualLinkDiagram {
    parse_gauss(code).expect("corpus codes are valid")
}

pub fn unknot() -> VirtualLinkDiagram {
    parsed(UNKNOT)
}

pub fn kink_pos() -> VirtualLinkDiagram {
    parsed(KINK_POS)
}

pub fn kink_neg() -> VirtualLinkDiagram {
    parsed(KINK_NEG)
}

pub fn double_kink() -> VirtualLinkDiagram {
    parsed(DOUBLE_KINK)
}

pub fn left_trefoil() -> VirtualLinkDiagram {
    parsed(LEFT_TREFOIL)
}

pub fn right_trefoil() -> VirtualLinkDiagram {
    parsed(RIGHT_TREFOIL)
}

pub fn figure_eight() -> VirtualLinkDiagram {
    parsed(FIGURE_EIGHT)
}

pub fn hopf_link() -> VirtualLinkDiagram {
    parsed(HOPF_LINK)
}

pub fn virtual_trefoil() -> VirtualLinkDiagram {
    parsed(VIRTUAL_TREFOIL)
}

pub fn kishino() -> VirtualLinkDiagram {
    parsed(KISHINO)
}

/// Diagrams of classical (planar-realizable) links; their arrow brackets
/// carry no K variables.
pub fn classical_corpus() -> Vec<(&'static str, VirtualLinkDiagram)> {
    vec![
        ("unknot", unknot()),
        ("kink_pos", kink_pos()),
        ("kink_neg", kink_neg()),
        ("double_kink", double_kink()),
        ("left_trefoil", left_trefoil()),
        ("right_trefoil", right_trefoil()),
        ("figure_eight", figure_eight()),
        ("hopf_link", hopf_link()),
    ]
}

/// The whole verification corpus.
pub fn full_corpus() -> Vec<(&'static str, VirtualLinkDiagram)> {
    let mut all = classical_corpus();
    all.push(("virtual_trefoil", virtual_trefoil()));
    all.push(("kishino", kishino()));
    all
}
