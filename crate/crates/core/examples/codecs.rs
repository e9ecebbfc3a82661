// Reading and writing graphs as edge lists and graph6.

use sigdom::{generate, parse_graph, serialize_graph, Format, GraphKind};

pub fn run() -> sigdom::Result<()> {
    let text = b"7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";
    let p7 = parse_graph(text, Format::EdgeList)?;
    let g6 = serialize_graph(&p7, Format::Graph6)?;
    println!("P7 as graph6: {}", String::from_utf8_lossy(&g6).trim_end());
    assert_eq!(g6, b"FhCGG\n");

    // round trip through both formats
    let back = parse_graph(&g6, Format::Graph6)?;
    assert_eq!(back, p7);
    assert_eq!(serialize_graph(&back, Format::EdgeList)?, text);

    let g = generate(&GraphKind::RandomConnected { n: 10, p: 0.3 }, 7)?;
    let g6 = serialize_graph(&g, Format::Graph6)?;
    assert_eq!(parse_graph(&g6, Format::Graph6)?, g);
    println!("random G(10, 0.3): {} edges, {}", g.m(), String::from_utf8_lossy(&g6).trim_end());

    match parse_graph(b"3 1\n0 5\n", Format::EdgeList) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("vertex 5 is out of range"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
