use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use super::Family;
use crate::error::{Error, Result};
use crate::exact_kernel::{int, rat, rational_serde, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum GroupFamily {
    GL,
    U,
    Sp,
    O,
}

/// One of the real groups `GL(n,R)`, `U(p,q)`, `Sp(2n,R)`, `O(p,q)`.
///
/// For `Sp` the stored `p` is `n` (half the matrix size) and `q == p`.
/// For `GL` the stored `q` is zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    pub p: usize,
    pub q: usize,
}

impl GroupDescriptor {
    pub fn gl(n: usize) -> Self {
        Self { family: GroupFamily::GL, p: n, q: 0 }
    }

    pub fn u(p: usize, q: usize) -> Self {
        Self { family: GroupFamily::U, p, q }
    }

    pub fn sp(n: usize) -> Self {
        Self { family: GroupFamily::Sp, p: n, q: n }
    }

    pub fn o(p: usize, q: usize) -> Self {
        Self { family: GroupFamily::O, p, q }
    }

    /// Real rank, which is the rank `k` of the Hecke algebra.
    pub fn real_rank(&self) -> usize {
        match self.family {
            GroupFamily::GL => self.p,
            _ => self.q,
        }
    }

    /// Dimension of the defining representation.
    pub fn dim_v(&self) -> usize {
        match self.family {
            GroupFamily::GL => self.p,
            GroupFamily::Sp => 2 * self.p,
            _ => self.p + self.q,
        }
    }

    fn validate(self) -> Result<Self> {
        let bad = |m: &str| Err(Error::UnsupportedGroup(format!("{self}: {m}")));
        match self.family {
            GroupFamily::GL if self.p == 0 => bad("n must be positive"),
            GroupFamily::Sp if self.p == 0 => bad("n must be positive"),
            GroupFamily::U | GroupFamily::O if self.q == 0 || self.p < self.q => {
                bad("need p >= q >= 1")
            }
            GroupFamily::O if self.p == 1 && self.q == 1 => bad("O(1,1) has restricted root system D_1"),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::GL => write!(f, "GL({},R)", self.p),
            GroupFamily::U => write!(f, "U({},{})", self.p, self.q),
            GroupFamily::Sp => write!(f, "Sp({},R)", 2 * self.p),
            GroupFamily::O => write!(f, "O({},{})", self.p, self.q),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Accepts `GL(n,R)`, `U(p,q)`, `Sp(2n,R)` and `O(p,q)`; `ℝ` may replace `R`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized group {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('ℝ', "R");
        let open = t.find('(').ok_or_else(bad)?;
        if !t.ends_with(')') {
            return Err(bad());
        }
        let name = &t[..open];
        let args: Vec<&str> = t[open + 1..t.len() - 1].split(',').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let g = match (name, args.as_slice()) {
            ("GL", [n, "R"]) => Self::gl(num(n)?),
            ("U", [p, q]) => Self::u(num(p)?, num(q)?),
            ("Sp", [m, "R"]) => {
                let m = num(m)?;
                if m % 2 != 0 {
                    return Err(Error::UnsupportedGroup(format!("Sp({m},R) needs an even size")));
                }
                Self::sp(m / 2)
            }
            ("O", [p, q]) => Self::o(num(p)?, num(q)?),
            _ => return Err(bad()),
        };
        g.validate()
    }
}

/// The graded Hecke algebra a group determines, up to isomorphism.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum HeckeSpec {
    /// `H_n`: type `A_{n-1}` on `n` coordinates with `c ≡ 1`.
    TypeA { n: usize },
    /// `H̃_k(c)`: type `C_k`, parameter 1 on `±e_i±e_j` and `c` on `±2e_i`.
    TypeC {
        k: usize,
        #[serde(serialize_with = "rational_serde::serialize")]
        c: Rational,
    },
}

impl HeckeSpec {
    pub fn rank(&self) -> usize {
        match self {
            HeckeSpec::TypeA { n } => *n,
            HeckeSpec::TypeC { k, .. } => *k,
        }
    }
}

impl fmt::Display for HeckeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeckeSpec::TypeA { n } => write!(f, "H_{n}"),
            HeckeSpec::TypeC { k, c } => write!(f, "H~_{k}({c})"),
        }
    }
}

/// Multiplicity `dim g_α` of one class of restricted roots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootMultiplicity {
    /// `e_i-e_j`, `e_i+e_j`, `e_i` or `2e_i`.
    pub class: &'static str,
    pub dim: usize,
}

/// One row of the group/algebra correspondence.
///
/// "Short" always refers to the roots `±e_i±e_j` and "long" to the roots
/// proportional to `e_i`, whatever the shape of `Φ∘`. The `table_*` values are
/// as traditionally listed: raw for `U(q,q)`, rescaled so the short value is 1
/// for `U(p,q)` with `p > q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TableOneRow {
    pub group: GroupDescriptor,
    pub phi: Family,
    pub phi0: Family,
    pub k: usize,
    pub multiplicities: Vec<RootMultiplicity>,
    #[serde(serialize_with = "rational_serde::option::serialize")]
    pub c_short_raw: Option<Rational>,
    #[serde(serialize_with = "rational_serde::option::serialize")]
    pub c_long_raw: Option<Rational>,
    #[serde(serialize_with = "rational_serde::option::serialize")]
    pub c_short_table: Option<Rational>,
    #[serde(serialize_with = "rational_serde::option::serialize")]
    pub c_long_table: Option<Rational>,
    /// Factor taking raw values to the normalized ones (short value 1).
    #[serde(serialize_with = "rational_serde::serialize")]
    pub normalization: Rational,
    pub hecke: HeckeSpec,
    pub note: Option<String>,
}

fn m(class: &'static str, dim: usize) -> RootMultiplicity {
    RootMultiplicity { class, dim }
}

/// `c(α) = dim g_α + 2 dim g_{2α}` summed from a multiplicity list.
pub fn raw_parameter(mults: &[RootMultiplicity], class: &str) -> Option<Rational> {
    let get = |c: &str| mults.iter().find(|x| x.class == c).map(|x| x.dim).unwrap_or(0);
    let (d1, d2) = match class {
        "short" => (get("e_i-e_j").max(get("e_i+e_j")), 0),
        "long" if get("e_i") > 0 => (get("e_i"), get("2e_i")),
        "long" => (get("2e_i"), 0),
        _ => return None,
    };
    if d1 + d2 == 0 {
        None
    } else {
        Some(int((d1 + 2 * d2) as i64))
    }
}

pub fn table_one(g: &GroupDescriptor) -> TableOneRow {
    let k = g.real_rank();
    let (phi, phi0, mults, normalization) = match g.family {
        GroupFamily::GL => (Family::A, Family::A, vec![m("e_i-e_j", 1)], int(1)),
        GroupFamily::U if g.p == g.q => {
            (Family::C, Family::C, vec![m("e_i-e_j", 2), m("e_i+e_j", 2), m("2e_i", 1)], rat(1, 2))
        }
        GroupFamily::U => (
            Family::BC,
            Family::B,
            vec![m("e_i-e_j", 2), m("e_i+e_j", 2), m("e_i", 2 * (g.p - g.q)), m("2e_i", 1)],
            rat(1, 2),
        ),
        GroupFamily::Sp => (Family::C, Family::C, vec![m("e_i-e_j", 1), m("e_i+e_j", 1), m("2e_i", 1)], int(1)),
        GroupFamily::O if g.p == g.q => (Family::D, Family::D, vec![m("e_i-e_j", 1), m("e_i+e_j", 1)], int(1)),
        GroupFamily::O => (
            Family::B,
            Family::B,
            vec![m("e_i-e_j", 1), m("e_i+e_j", 1), m("e_i", g.p - g.q)],
            int(1),
        ),
    };
    let mults: Vec<RootMultiplicity> = mults
        .into_iter()
        .filter(|x| k >= 2 || !x.class.contains('j'))
        .collect();
    let c_short_raw = raw_parameter(&mults, "short");
    let c_long_raw = raw_parameter(&mults, "long");
    let norm = |c: &Option<Rational>| c.as_ref().map(|x| x * &normalization);
    let hecke = match g.family {
        GroupFamily::GL => HeckeSpec::TypeA { n: k },
        _ => {
            let long = norm(&c_long_raw).unwrap_or_else(|| int(0));
            // a root e_i with value x gives the same algebra as 2e_i with x/2
            let c = if phi0 == Family::B { long / int(2) } else { long };
            HeckeSpec::TypeC { k, c }
        }
    };
    let (c_short_table, c_long_table) = match g.family {
        GroupFamily::U if g.p > g.q => (norm(&c_short_raw), norm(&c_long_raw)),
        _ => (c_short_raw.clone(), c_long_raw.clone()),
    };
    let note = (g.family == GroupFamily::O && g.p == g.q)
        .then(|| format!("H~_{k}(0) = H(D_{k},1) x Z/2Z"));
    TableOneRow {
        group: *g,
        phi,
        phi0,
        k,
        multiplicities: mults,
        c_short_raw,
        c_long_raw,
        c_short_table,
        c_long_table,
        normalization,
        hecke,
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["GL(3,R)", "U(2,1)", "Sp(4,R)", "O(3,2)", "O(2,2)"] {
            let g: GroupDescriptor = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("GL(3,ℝ)".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::gl(3));
        for bad in ["GL(3)", "U(1,2)", "Sp(3,R)", "O(1,1)", "SL(2,R)", "U(2,0)"] {
            assert!(bad.parse::<GroupDescriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn documented_rows() {
        let r = table_one(&"GL(3,R)".parse().unwrap());
        assert_eq!((r.phi0, r.k, r.hecke.clone()), (Family::A, 3, HeckeSpec::TypeA { n: 3 }));
        let r = table_one(&"U(2,2)".parse().unwrap());
        assert_eq!((r.c_short_table, r.c_long_table), (Some(int(2)), Some(int(1))));
        assert_eq!(r.hecke, HeckeSpec::TypeC { k: 2, c: rat(1, 2) });
        let r = table_one(&"U(3,2)".parse().unwrap());
        assert_eq!((r.phi, r.phi0), (Family::BC, Family::B));
        assert_eq!((r.c_short_table, r.c_long_table), (Some(int(1)), Some(int(2))));
        assert_eq!(r.hecke, HeckeSpec::TypeC { k: 2, c: int(1) });
        let r = table_one(&"O(2,2)".parse().unwrap());
        assert_eq!((r.phi0, r.hecke.clone()), (Family::D, HeckeSpec::TypeC { k: 2, c: int(0) }));
        assert!(r.note.is_some());
        let r = table_one(&"O(4,1)".parse().unwrap());
        assert_eq!(r.hecke, HeckeSpec::TypeC { k: 1, c: rat(3, 2) });
        let r = table_one(&"Sp(6,R)".parse().unwrap());
        assert_eq!(r.hecke, HeckeSpec::TypeC { k: 3, c: int(1) });
    }
}
