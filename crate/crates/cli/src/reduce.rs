use crate::runner::Item;
use serde_json::{json, Value};
use snarklab::io::{write_graph6, write_multi_text};
use snarklab::reductions::{reduce, RuleSet};
use snarklab::MultiGraph;

/// graph6 when the graph is simple, multi_text otherwise.
pub fn encode(g: &MultiGraph) -> String {
    write_graph6(g).unwrap_or_else(|_| write_multi_text(g).trim_end().to_string())
}

/// Reduces one record; the JSON carries the trace and the encoded result.
pub fn reduce_item(it: &Item, rules: RuleSet) -> (Value, Option<MultiGraph>) {
    let g = match &it.graph {
        Ok(g) => g,
        Err(e) => {
            return (
                json!({"source": it.source, "line": it.line, "error": e}),
                None,
            )
        }
    };
    match reduce(g, rules) {
        Ok(r) => {
            let steps: Vec<Value> = r
                .trace
                .steps
                .iter()
                .map(|s| {
                    json!({"rule": s.rule.name(), "vertices": s.vertices, "edges": s.edges,
                           "order_before": s.order_before, "order_after": s.order_after})
                })
                .collect();
            let v = json!({"source": it.source, "line": it.line, "input_order": g.order(),
                           "output_order": r.graph.order(), "oddness": r.oddness,
                           "steps": steps, "graph": encode(&r.graph)});
            (v, Some(r.graph))
        }
        Err(e) => (
            json!({"source": it.source, "line": it.line, "error": e.to_string()}),
            None,
        ),
    }
}

pub fn text(v: &Value) -> String {
    let src = format!("{}:{}", v["source"].as_str().unwrap_or("?"), v["line"]);
    if let Some(e) = v.get("error") {
        return format!("{src} error: {}\n", e.as_str().unwrap_or(""));
    }
    let mut s = format!(
        "{src} {} -> {} vertices, oddness {}\n",
        v["input_order"], v["output_order"], v["oddness"]
    );
    for st in v["steps"].as_array().into_iter().flatten() {
        s.push_str(&format!(
            "    {:<13} {} -> {}  vertices {}\n",
            st["rule"].as_str().unwrap_or(""),
            st["order_before"],
            st["order_after"],
            st["vertices"]
        ));
    }
    s.push_str(&format!("    {}\n", v["graph"].as_str().unwrap_or("")));
    s
}
