use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Deserialize;
use theta_dims::{make_sl2, GroupTable};

/// `cyclic:n`, `sl2:p` or `cayley:FILE`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupArg {
    Cyclic(usize),
    Sl2(u32),
    Cayley(PathBuf),
}

impl FromStr for GroupArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("group `{s}` must look like cyclic:N, sl2:P or cayley:FILE"))?;
        match kind {
            "cyclic" => rest
                .parse()
                .ok()
                .filter(|&n: &usize| n >= 1)
                .map(GroupArg::Cyclic)
                .ok_or_else(|| format!("cyclic order `{rest}` must be a positive integer")),
            "sl2" => rest
                .parse()
                .map(GroupArg::Sl2)
                .map_err(|_| format!("prime `{rest}` must be a positive integer")),
            "cayley" if !rest.is_empty() => Ok(GroupArg::Cayley(rest.into())),
            _ => Err(format!("group `{s}` must look like cyclic:N, sl2:P or cayley:FILE")),
        }
    }
}

impl fmt::Display for GroupArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupArg::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupArg::Sl2(p) => write!(f, "sl2:{p}"),
            GroupArg::Cayley(path) => write!(f, "cayley:{}", path.display()),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    order: usize,
    mul: Vec<Vec<usize>>,
}

impl GroupArg {
    pub fn load(&self) -> Result<GroupTable, String> {
        match self {
            GroupArg::Cyclic(n) => GroupTable::cyclic(*n).map_err(|e| e.to_string()),
            GroupArg::Sl2(p) => make_sl2(*p).map_err(|e| e.to_string()),
            GroupArg::Cayley(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let file: CayleyFile = serde_json::from_str(&text)
                    .map_err(|e| format!("{}: invalid Cayley table JSON: {e}", path.display()))?;
                if file.mul.len() != file.order {
                    return Err(format!(
                        "{}: order is {} but mul has {} rows",
                        path.display(),
                        file.order,
                        file.mul.len()
                    ));
                }
                GroupTable::from_cayley(&file.mul).map_err(|e| format!("{}: {e}", path.display()))
            }
        }
    }

    pub fn is_sl2f5(&self) -> bool {
        *self == GroupArg::Sl2(5)
    }
}
