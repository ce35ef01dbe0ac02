//! Build the named instance families, write them in the edge-list format and
//! read them back.
//!
//!     cargo run --example graph_io

use modk::graph::{generate, parse_graph, GeneratorSpec};

fn main() {
    let specs = [
        GeneratorSpec::Star { k: 4 },
        GeneratorSpec::CompleteBipartite { a: 2, b: 3 },
        GeneratorSpec::KkkPlusUniversal { k: 2 },
        GeneratorSpec::RandomGnm {
            n: 8,
            m: 10,
            seed: 42,
        },
    ];
    for spec in &specs {
        let g = generate(spec).expect("valid parameters");
        let text = g.to_text();
        println!(
            "# {spec:?}: {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        );
        print!("{text}");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    let messy = "# comments and any edge order are fine\nn 6\n4 2\n0 1\n\n2 0\n";
    let g = parse_graph(messy).unwrap();
    println!("# normalized:");
    print!("{}", g.to_text());

    for bad in ["0 0", "0 1\n1 0", "n 2\n0 5", "0 one"] {
        println!("# {bad:?} -> {}", parse_graph(bad).unwrap_err());
    }
}
