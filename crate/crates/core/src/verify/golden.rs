//! Reference values the suites compare against.

use crate::cusps::{FamilyId, NiemeierKind};

/// Cusp root types per family, in table order.
pub const CUSPS: [(FamilyId, &[&str]); 4] = [
    (FamilyId { n: 0, k: 2 }, &["E8^2"]),
    (FamilyId { n: 0, k: 1 }, &["E8^2", "E8+E6+A2", "(E6^2+A2^2)*"]),
    (FamilyId { n: 1, k: 1 }, &["E8+E6", "E6^2+A2", "E8+A2^3", "(E6+A2^4)*"]),
    (FamilyId { n: 2, k: 1 }, &["E8+A2^2", "E6^2", "E6+A2^3", "A2^6*"]),
];

/// `S`, `T`, `P` expressions per family.
pub const LATTICES: [(FamilyId, &str, &str, &str); 4] = [
    (FamilyId { n: 0, k: 2 }, "U", "U+U+E8+E8", "E8"),
    (FamilyId { n: 0, k: 1 }, "U(3)", "U+U(3)+E8+E8", "E6+A2"),
    (FamilyId { n: 1, k: 1 }, "U(3)+A2", "U+U(3)+E6+E8", "E6+A2^2"),
    (FamilyId { n: 2, k: 1 }, "U(3)+A2^2", "U+U(3)+E6^2", "E6+A2^3"),
];

/// Published number of embeddings of `P` into each root system.
pub const EMBEDDING_COUNTS: [(FamilyId, NiemeierKind, usize); 8] = [
    (FamilyId { n: 0, k: 2 }, NiemeierKind::E8Cubed, 1),
    (FamilyId { n: 0, k: 2 }, NiemeierKind::E6Fourth, 0),
    (FamilyId { n: 0, k: 1 }, NiemeierKind::E8Cubed, 2),
    (FamilyId { n: 0, k: 1 }, NiemeierKind::E6Fourth, 1),
    (FamilyId { n: 1, k: 1 }, NiemeierKind::E8Cubed, 3),
    (FamilyId { n: 1, k: 1 }, NiemeierKind::E6Fourth, 2),
    (FamilyId { n: 2, k: 1 }, NiemeierKind::E8Cubed, 4),
    (FamilyId { n: 2, k: 1 }, NiemeierKind::E6Fourth, 4),
];

/// One row of an explicit embedding column: factors of `P` placed in one
/// component, the component, the complement, and `|P⊥_{R*}/R|` restricted to
/// that component.
pub type ExplRow = (&'static str, &'static str, &'static str, u64);

/// Explicit embedding tables: each column lists every component of `R`.
/// Rows for untouched components are written out individually.
pub const EXPLICIT: [(FamilyId, NiemeierKind, &[&[ExplRow]]); 6] = [
    (
        FamilyId { n: 0, k: 1 },
        NiemeierKind::E8Cubed,
        &[
            &[("E6+A2", "E8", "0", 1), ("", "E8", "E8", 1), ("", "E8", "E8", 1)],
            &[("E6", "E8", "A2", 1), ("A2", "E8", "E6", 1), ("", "E8", "E8", 1)],
        ],
    ),
    (
        FamilyId { n: 0, k: 1 },
        NiemeierKind::E6Fourth,
        &[&[("E6", "E6", "0", 1), ("A2", "E6", "A2^2", 3), ("", "E6", "E6", 3), ("", "E6", "E6", 3)]],
    ),
    (
        FamilyId { n: 1, k: 1 },
        NiemeierKind::E8Cubed,
        &[
            &[("E6+A2", "E8", "0", 1), ("A2", "E8", "E6", 1), ("", "E8", "E8", 1)],
            &[("E6", "E8", "A2", 1), ("A2^2", "E8", "A2^2", 1), ("", "E8", "E8", 1)],
            &[("E6", "E8", "A2", 1), ("A2", "E8", "E6", 1), ("A2", "E8", "E6", 1)],
        ],
    ),
    (
        FamilyId { n: 1, k: 1 },
        NiemeierKind::E6Fourth,
        &[
            &[("E6", "E6", "0", 1), ("A2^2", "E6", "A2", 1), ("", "E6", "E6", 3), ("", "E6", "E6", 3)],
            &[("E6", "E6", "0", 1), ("A2", "E6", "A2^2", 3), ("A2", "E6", "A2^2", 3), ("", "E6", "E6", 3)],
        ],
    ),
    (
        FamilyId { n: 2, k: 1 },
        NiemeierKind::E8Cubed,
        &[
            &[("E6+A2", "E8", "0", 1), ("A2^2", "E8", "A2^2", 1), ("", "E8", "E8", 1)],
            &[("E6+A2", "E8", "0", 1), ("A2", "E8", "E6", 1), ("A2", "E8", "E6", 1)],
            &[("E6", "E8", "A2", 1), ("A2^3", "E8", "A2", 1), ("", "E8", "E8", 1)],
            &[("E6", "E8", "A2", 1), ("A2^2", "E8", "A2^2", 1), ("A2", "E8", "E6", 1)],
        ],
    ),
    (
        FamilyId { n: 2, k: 1 },
        NiemeierKind::E6Fourth,
        &[
            &[("E6", "E6", "0", 1), ("A2^3", "E6", "0", 1), ("", "E6", "E6", 3), ("", "E6", "E6", 3)],
            &[("E6", "E6", "0", 1), ("A2^2", "E6", "A2", 1), ("A2", "E6", "A2^2", 3), ("", "E6", "E6", 3)],
            &[("E6", "E6", "0", 1), ("A2^2", "E6", "A2", 1), ("A2", "E6", "A2^2", 3), ("", "E6", "E6", 3)],
            &[("E6", "E6", "0", 1), ("A2", "E6", "A2^2", 3), ("A2", "E6", "A2^2", 3), ("A2", "E6", "A2^2", 3)],
        ],
    ),
];

/// Root-complement identities `(sub)⊥_{target} = result`.
pub const COMPLEMENTS: [(&str, &str, &str); 5] = [
    ("A2", "E8", "E6"),
    ("E6", "E8", "A2"),
    ("A2", "E6", "A2^2"),
    ("A2^2", "E6", "A2"),
    ("A2^2", "E8", "A2^2"),
];

/// Component rows with their primitive root types.
pub const COMPONENTS: [(u8, &[(u8, u8)], &str); 6] = [
    (0, &[(1, 3)], "E6+A2"),
    (0, &[(0, 1), (2, 2)], "E8"),
    (1, &[(0, 3)], "A2^3"),
    (1, &[(0, 1), (1, 2)], "E6"),
    (2, &[(0, 1), (0, 2)], "A2^2"),
    (3, &[(0, 1), (0, 1), (0, 1)], "A2"),
];
