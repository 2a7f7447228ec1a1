//! Bundled instances and the registry that builds them from keys.
//!
//! Keys: `finite-sets`, `wreath:G`, `wedge:G`, `wedge-literal:G`,
//! `monomial:k`, `bichar:k:q`, `discrete:{Z|N|Z/k|M2F2|Z[G]}` and
//! `table:PATH`, where `G` is a comma list of cyclic orders such as `2,2`.

pub mod bichar;
pub mod discrete;
pub mod finite_sets;
pub mod functors;
pub mod monomial;
pub mod table;
pub mod wedge;
pub mod wreath;

pub use bichar::{Bichar, BicharMor};
pub use discrete::Discrete;
pub use finite_sets::FiniteSets;
pub use monomial::{Monomial, MonomialMatrix};
pub use table::TableCat;
pub use wedge::{LiteralObj, Wedge, WedgeLiteral, WedgeMor};
pub use wreath::{Wreath, WreathMor};

use crate::error::{Error, Result};
use crate::rig::FiniteAbelianGroup;

/// A registry-built instance.
#[derive(Clone, Debug)]
pub enum Instance {
    FiniteSets(FiniteSets),
    Wreath(Wreath),
    Wedge(Wedge),
    WedgeLiteral(WedgeLiteral),
    Monomial(Monomial),
    Bichar(Bichar),
    Discrete(Discrete),
    Table(TableCat),
}

/// Runs `$body` with `$c` bound to the concrete instance inside `$inst`.
#[macro_export]
macro_rules! with_instance {
    ($inst:expr, $c:ident => $body:expr) => {
        match $inst {
            $crate::instances::Instance::FiniteSets($c) => $body,
            $crate::instances::Instance::Wreath($c) => $body,
            $crate::instances::Instance::Wedge($c) => $body,
            $crate::instances::Instance::WedgeLiteral($c) => $body,
            $crate::instances::Instance::Monomial($c) => $body,
            $crate::instances::Instance::Bichar($c) => $body,
            $crate::instances::Instance::Discrete($c) => $body,
            $crate::instances::Instance::Table($c) => $body,
        }
    };
}

fn parse_u32(text: &str, what: &str, key: &str) -> Result<u32> {
    text.trim().parse().map_err(|_| Error::UnknownInstance(format!("bad {} `{}` in `{}`", what, text, key)))
}

fn parse_group(text: &str, key: &str) -> Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::parse(text).map_err(|_| Error::UnknownInstance(format!("bad group `{}` in `{}`", text, key)))
}

pub fn make_instance(key: &str) -> Result<Instance> {
    let (head, rest) = key.split_once(':').unwrap_or((key, ""));
    let need_param = || {
        if rest.is_empty() {
            Err(Error::UnknownInstance(format!("`{}` needs a parameter", key)))
        } else {
            Ok(())
        }
    };
    Ok(match head {
        "finite-sets" if rest.is_empty() => Instance::FiniteSets(FiniteSets),
        "wreath" => {
            need_param()?;
            Instance::Wreath(Wreath::new(parse_group(rest, key)?))
        }
        "wedge" => {
            need_param()?;
            Instance::Wedge(Wedge::new(parse_group(rest, key)?))
        }
        "wedge-literal" => {
            need_param()?;
            Instance::WedgeLiteral(WedgeLiteral::new(parse_group(rest, key)?))
        }
        "monomial" => {
            need_param()?;
            let k = parse_u32(rest, "order", key)?;
            Instance::Monomial(Monomial::new(k).map_err(|e| Error::UnknownInstance(e.to_string()))?)
        }
        "bichar" => {
            let (k, q) = rest
                .split_once(':')
                .ok_or_else(|| Error::UnknownInstance(format!("`{}` needs k and q", key)))?;
            let (k, q) = (parse_u32(k, "order", key)?, parse_u32(q, "exponent", key)?);
            Instance::Bichar(Bichar::new(k, q).map_err(|e| Error::UnknownInstance(e.to_string()))?)
        }
        "discrete" => Instance::Discrete(match rest {
            "Z" => Discrete::integers(),
            "N" => Discrete::naturals(),
            "M2F2" => Discrete::m2f2(),
            r if r.starts_with("Z/") => {
                let k = parse_u32(&r[2..], "modulus", key)?;
                Discrete::modular(k as u64).map_err(|e| Error::UnknownInstance(e.to_string()))?
            }
            r if r.starts_with("Z[") && r.ends_with(']') => Discrete::group_ring(parse_group(&r[2..r.len() - 1], key)?),
            _ => return Err(Error::UnknownInstance(format!("unknown ring `{}` in `{}`", rest, key))),
        }),
        "table" => {
            need_param()?;
            let text = std::fs::read_to_string(rest)
                .map_err(|e| Error::UnknownInstance(format!("cannot read `{}`: {}", rest, e)))?;
            Instance::Table(TableCat::from_json(&text)?)
        }
        _ => return Err(Error::UnknownInstance(key.to_string())),
    })
}

/// The instances every law suite is run against by default.
pub const BUNDLED: &[&str] = &[
    "finite-sets",
    "wreath:2",
    "wreath:3",
    "wreath:4",
    "wreath:2,2",
    "wedge:2",
    "wedge:3",
    "wedge:4",
    "wedge:2,2",
    "monomial:2",
    "monomial:4",
    "monomial:8",
    "discrete:Z",
    "discrete:M2F2",
    "discrete:Z[3]",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Bimonoidal;

    #[test]
    fn keys_round_trip_through_names() {
        for key in BUNDLED.iter().chain(["bichar:3:1", "wedge-literal:3", "discrete:N", "discrete:Z/6"].iter()) {
            let inst = make_instance(key).unwrap();
            let name = with_instance!(&inst, c => c.name());
            assert_eq!(&name, key);
        }
    }

    #[test]
    fn unknown_keys_are_rejected() {
        for key in ["nope", "wreath", "wreath:x", "bichar:3", "discrete:Q", "finite-sets:2", "monomial:0"] {
            assert!(matches!(make_instance(key), Err(Error::UnknownInstance(_))), "{}", key);
        }
    }
}
