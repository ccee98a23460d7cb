use std::fmt;
use std::str::FromStr;

use super::RandomLabError;
use crate::autgroup::graph_is_rigid;
use crate::constructions::{check_graph_conditions, degree4_far_apart, degrees_45, enough_degree4, no_short_cycles};
use crate::structures::{is_connected, Graph};

/// A named graph property. Parameterised forms are written `name:M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Connected,
    Rigid,
    ConnectedAndRigid,
    Degrees45,
    NoShortCycles(usize),
    EnoughDegree4(usize),
    Degree4FarApart(usize),
    /// Conjunction of all level-`m` conditions.
    AllConditions(usize),
}

impl Predicate {
    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            Predicate::Connected => is_connected(g),
            Predicate::Rigid => graph_is_rigid(g),
            Predicate::ConnectedAndRigid => is_connected(g) && graph_is_rigid(g),
            Predicate::Degrees45 => degrees_45(g),
            Predicate::NoShortCycles(m) => no_short_cycles(g, m),
            Predicate::EnoughDegree4(m) => enough_degree4(g, m),
            Predicate::Degree4FarApart(m) => degree4_far_apart(g, m),
            Predicate::AllConditions(m) => {
                degrees_45(g)
                    && enough_degree4(g, m)
                    && no_short_cycles(g, m)
                    && degree4_far_apart(g, m)
                    && check_graph_conditions(g, m).all
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Connected => write!(f, "connected"),
            Predicate::Rigid => write!(f, "rigid"),
            Predicate::ConnectedAndRigid => write!(f, "connected_and_rigid"),
            Predicate::Degrees45 => write!(f, "degrees_45"),
            Predicate::NoShortCycles(m) => write!(f, "no_short_cycles:{m}"),
            Predicate::EnoughDegree4(m) => write!(f, "enough_degree4:{m}"),
            Predicate::Degree4FarApart(m) => write!(f, "degree4_far_apart:{m}"),
            Predicate::AllConditions(m) => write!(f, "all_conditions:{m}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = RandomLabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || RandomLabError::UnknownPredicate(s.to_string());
        let (name, param) = match s.trim().split_once(':') {
            Some((name, m)) => {
                let m: usize = m.parse().map_err(|_| unknown())?;
                if m < 3 {
                    return Err(RandomLabError::InvalidConfig(format!("{name} needs m >= 3, got {m}")));
                }
                (name, Some(m))
            }
            None => (s.trim(), None),
        };
        match (name, param) {
            ("connected", None) => Ok(Predicate::Connected),
            ("rigid", None) => Ok(Predicate::Rigid),
            ("connected_and_rigid", None) => Ok(Predicate::ConnectedAndRigid),
            ("degrees_45", None) => Ok(Predicate::Degrees45),
            ("no_short_cycles", Some(m)) => Ok(Predicate::NoShortCycles(m)),
            ("enough_degree4", Some(m)) => Ok(Predicate::EnoughDegree4(m)),
            ("degree4_far_apart", Some(m)) => Ok(Predicate::Degree4FarApart(m)),
            ("all_conditions" | "gamma1m", Some(m)) => Ok(Predicate::AllConditions(m)),
            _ => Err(unknown()),
        }
    }
}
