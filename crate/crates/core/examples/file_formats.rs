//! Reads and writes DIMACS CNF and the graph file format, then counts exactly.

use paritysep::io::{parse_dimacs, parse_graph, write_dimacs, write_graph};
use paritysep::oracle::{count_perfect_matchings, count_sat, matchsum, Limits};

const CNF: &str = "c two clauses\np cnf 3 2\n1 -2 3 0\n-1 2 0\n";
const GRAPH: &str = "p graph 4 5 edge\ne 1 2 -1\ne 2 3 1/2\ne 3 4 1\ne 4 1 3\ne 1 3 1\n";
const VERTEX_WEIGHTED: &str = "p graph 3 2 vertex\nw 1 1\nw 2 -1\nw 3 2\ne 1 2\ne 2 3\n";

fn main() -> paritysep::Result<()> {
    let limits = Limits::default();
    let phi = parse_dimacs(CNF)?;
    println!(
        "{}#SAT = {}\n",
        write_dimacs(&phi),
        count_sat(&phi, &limits)?
    );

    let g = parse_graph(GRAPH)?;
    println!(
        "{}PerfMatch = {}\n",
        write_graph(&g),
        count_perfect_matchings(&g, &limits)?
    );

    let h = parse_graph(VERTEX_WEIGHTED)?;
    println!("{}MatchSum = {}", write_graph(&h), matchsum(&h, &limits)?);
    assert_eq!(parse_graph(&write_graph(&h))?, h);
    Ok(())
}
