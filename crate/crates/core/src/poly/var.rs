use std::fmt;

/// A polynomial variable.
///
/// The derived order is the ring's variable order:
/// `x[0,1] < x[1,1] < ... < x[n_k,k] < y0 < y1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    /// `x[i,j]`: summand `j` (1-based), level `i` (0-based).
    Main { j: u32, i: u32 },
    /// `y0` or `y1`.
    Aux(u8),
}

impl VarId {
    pub const Y0: VarId = VarId::Aux(0);
    pub const Y1: VarId = VarId::Aux(1);

    pub fn x(i: u32, j: u32) -> Self {
        VarId::Main { j, i }
    }

    pub fn is_main(self) -> bool {
        matches!(self, VarId::Main { .. })
    }

    pub fn summand(self) -> Option<u32> {
        match self {
            VarId::Main { j, .. } => Some(j),
            VarId::Aux(_) => None,
        }
    }

    pub fn level(self) -> Option<u32> {
        match self {
            VarId::Main { i, .. } => Some(i),
            VarId::Aux(_) => None,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Main { j, i } => write!(f, "x[{i},{j}]"),
            VarId::Aux(a) => write!(f, "y{a}"),
        }
    }
}
