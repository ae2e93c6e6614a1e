//! Named families, each producing graphs (or networks) plus a JSON trace of
//! how they were put together.

use crate::fail::Failure;
use serde_json::{json, Value};
use snarklab::canon::are_isomorphic;
use snarklab::constructions::families::{
    build_h_candidates, build_l, build_m, build_n1, build_n2, build_r, build_y, build_z, chain_z,
    double_p3, h1, h2, m_plan, ring_orientation, CHAIN_LINKS, Y_CHOICE,
};
use snarklab::constructions::{
    build_p2, build_p3, build_p4e, build_p4v, build_p5ev, build_p5vvv, flower_snark, petersen,
};
use snarklab::{MultiGraph, Network};

pub const FAMILIES: &str = "\
petersen
flower K          (K odd, at least 3)
P2 | P3 | P4v | P4e | P5vvv | P5ev | N1 | N2 | Z | Y   (networks)
P3-pair           (two P3 copies joined terminal to terminal)
R I               (I >= 0)
H [1|2]           (no index: run the order-28 search and emit every candidate)
ring BLOCK...     (blocks among N1, N2, P4v, P4e)
snark44           (ring N2 N1)
Z-chain R         (R even, at least 2)
L R               (R >= 2)
M R               (R >= 2)";

pub struct Built {
    pub graph: MultiGraph,
    /// Terminals and connectors when the result is a network.
    pub network: Option<Network>,
    pub trace: Value,
}

fn usage(family: &str, msg: &str) -> Failure {
    Failure::Usage(format!(
        "{family}: {msg}\nfamilies and parameters:\n{FAMILIES}"
    ))
}

fn one_param(family: &str, params: &[String]) -> Result<usize, Failure> {
    match params {
        [p] => p.parse().map_err(|_| {
            usage(
                family,
                &format!("parameter {p:?} is not a non-negative integer"),
            )
        }),
        _ => Err(usage(family, "expects exactly one integer parameter")),
    }
}

fn no_params(family: &str, params: &[String]) -> Result<(), Failure> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(usage(family, "takes no parameters"))
    }
}

fn graph(g: MultiGraph, trace: Value) -> Built {
    Built {
        graph: g,
        network: None,
        trace,
    }
}

fn network(n: Network, trace: Value) -> Built {
    Built {
        graph: n.graph().clone(),
        network: Some(n),
        trace,
    }
}

fn four_pole(name: &str) -> Option<Network> {
    Some(match name.to_ascii_lowercase().as_str() {
        "n1" => build_n1(),
        "n2" => build_n2(),
        "p4v" => build_p4v(),
        "p4e" => build_p4e(),
        _ => return None,
    })
}

fn ring(family: &str, names: &[String]) -> Result<Built, Failure> {
    if names.is_empty() {
        return Err(usage(family, "needs at least one block"));
    }
    let blocks = names
        .iter()
        .map(|n| four_pole(n).ok_or_else(|| usage(family, &format!("unknown block {n:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let (g, flips) = ring_orientation(&blocks)?;
    Ok(graph(
        g,
        json!({"blocks": names, "links_reversed": flips,
               "junctions": "second pair of each block to the first pair of the next"}),
    ))
}

pub fn build(family: &str, params: &[String]) -> Result<Vec<Built>, Failure> {
    let f = family.to_ascii_lowercase();
    let net = |n: Network, name: &str| network(n, json!({"block": name}));
    Ok(vec![match f.as_str() {
        "petersen" => {
            no_params(family, params)?;
            graph(petersen(), json!({}))
        }
        "flower" => {
            let k = one_param(family, params)?;
            graph(flower_snark(k)?, json!({"k": k}))
        }
        "p2" | "p3" | "p4v" | "p4e" | "p5vvv" | "p5ev" => {
            no_params(family, params)?;
            let n = match f.as_str() {
                "p2" => build_p2(),
                "p3" => build_p3(),
                "p4v" => build_p4v(),
                "p4e" => build_p4e(),
                "p5vvv" => build_p5vvv(),
                _ => build_p5ev(),
            };
            net(
                n,
                "Petersen graph with vertices split off or edges cut, lowest-numbered choice",
            )
        }
        "n1" => {
            no_params(family, params)?;
            net(build_n1(), "P4e second pair joined to P4v first pair")
        }
        "n2" => {
            no_params(family, params)?;
            net(build_n2(), "P4e with a copy of P4v on each pair")
        }
        "z" => {
            no_params(family, params)?;
            net(build_z(), "P5vvv with a copy of P5ev on each pair")
        }
        "y" => {
            no_params(family, params)?;
            network(
                build_y(),
                json!({"block": "J5 with two vertices split off", "other_vertex": Y_CHOICE.other}),
            )
        }
        "p3-pair" => {
            no_params(family, params)?;
            graph(
                double_p3(),
                json!({"blocks": ["P3", "P3"], "junctions": "terminal i to terminal i"}),
            )
        }
        "r" => {
            let i = one_param(family, params)?;
            let base = if i % 2 == 0 { "petersen" } else { "H1" };
            graph(
                build_r(i)?,
                json!({"base": base, "extensions": i / 2, "extension": "P2 inserted into the three edges at vertex 0"}),
            )
        }
        "h" => match params {
            [] => {
                let hs = build_h_candidates()?;
                let n = hs.len();
                return Ok(hs
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| {
                        let which = if are_isomorphic(&g, &h1()) {
                            "H1"
                        } else if are_isomorphic(&g, &h2()) {
                            "H2"
                        } else {
                            "other"
                        };
                        graph(g, json!({"search": "order-28 oddness-4 candidates", "index": i, "of": n, "matches": which}))
                    })
                    .collect());
            }
            _ => match one_param(family, params)? {
                1 => graph(h1(), json!({"frozen": "H1"})),
                2 => graph(h2(), json!({"frozen": "H2"})),
                _ => return Err(usage(family, "index must be 1 or 2")),
            },
        },
        "ring" => ring(family, params)?,
        "snark44" => {
            no_params(family, params)?;
            ring(family, &["N2".to_string(), "N1".to_string()])?
        }
        "z-chain" => {
            let r = one_param(family, params)?;
            graph(
                chain_z(r)?,
                json!({"copies": r, "links": {"a": CHAIN_LINKS.a, "a_perm": CHAIN_LINKS.a_perm, "b_perm": CHAIN_LINKS.b_perm}}),
            )
        }
        "l" => {
            let r = one_param(family, params)?;
            let l = build_l(r)?;
            graph(l.graph, json!({"copies": r, "copy_of_vertex": l.copy}))
        }
        "m" => {
            let r = one_param(family, params)?;
            let plan = m_plan(r)?;
            let g = build_m(r)?;
            graph(
                g,
                json!({"L_order": plan.l.graph.order(), "circuit": plan.circuit,
                       "supervertices": "X on each circuit vertex", "superedges": "Y on each circuit edge",
                       "y_other_vertex": Y_CHOICE.other}),
            )
        }
        _ => return Err(usage(family, "unknown family")),
    }])
}
