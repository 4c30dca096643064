use adefusion::catalog::catalog;
use adefusion::morita::{algebra_candidates, bp_table, nimrep_search};

fn main() {
    let ring = catalog("adD:10").unwrap().ring;
    let g = ring.label_index("f2").unwrap();
    for rank in 1..=6usize {
        let t = std::time::Instant::now();
        let reps = nimrep_search(&ring, g, rank).unwrap();
        let mut cands: Vec<_> = reps
            .iter()
            .flat_map(|n| algebra_candidates(n).into_iter().map(|c| c.vector))
            .collect();
        cands.sort();
        cands.dedup();
        println!(
            "rank {rank}: {} nimreps, {} candidates in {:?}",
            reps.len(),
            cands.len(),
            t.elapsed()
        );
        for c in &cands {
            println!("  {}", ring.format_vec(c));
        }
    }
    let t = std::time::Instant::now();
    match bp_table("adD:10") {
        Ok(tbl) => {
            println!("bp table in {:?}; group order {}", t.elapsed(), tbl.group_order);
            for (ri, row) in tbl.cells.iter().enumerate() {
                let line: Vec<String> = row
                    .iter()
                    .map(|c| tbl.candidates.candidates[c.underlying].vector.iter().sum::<u64>().to_string())
                    .collect();
                println!("row {} ({}): {}", ri, tbl.row_names[ri], line.join(" "));
            }
            // print distinct cell vectors
            let mut seen = std::collections::BTreeMap::new();
            for row in &tbl.cells {
                for c in row {
                    seen.entry(c.vector.clone()).and_modify(|n| *n += 1).or_insert(1usize);
                }
            }
            let base = catalog("adD:10").unwrap().ring;
            for (v, n) in seen {
                println!("{} x {}", n, base.format_vec(&v));
            }
        }
        Err(e) => println!("bp ERROR: {e}"),
    }
}
