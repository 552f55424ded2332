use arrowpoly::vlink::parse_gauss;

#[test]
#[ignore]
fn search_kishino() {
    let roles = ["O", "U"];
    let signs = ["+", "-"];
    let half = |c1: u32, c2: u32, r1: usize, r2: usize, s1: usize, s2: usize| {
        // interleaved pattern c1 c2 c1 c2 with first-occurrence roles r1, r2
        format!(
            "{}{}{} {}{}{} {}{}{} {}{}{}",
            roles[r1],
            c1,
            signs[s1],
            roles[r2],
            c2,
            signs[s2],
            roles[1 - r1],
            c1,
            signs[s1],
            roles[1 - r2],
            c2,
            signs[s2]
        )
    };
    let mut hits = 0;
    for r1 in 0..2 {
        for r2 in 0..2 {
            for s1 in 0..2 {
                for s2 in 0..2 {
                    let h1 = half(1, 2, r1, r2, s1, s2);
                    let l1 = parse_gauss(&h1).unwrap();
                    let h1_trivial =
                        l1.jones().is_one() && l1.normalized_arrow().is_one();
                    for r3 in 0..2 {
                        for r4 in 0..2 {
                            for s3 in 0..2 {
                                for s4 in 0..2 {
                                    let h2 = half(3, 4, r3, r4, s3, s4);
                                    let l2 = parse_gauss(&h2).unwrap();
                                    let h2_trivial = l2.jones().is_one()
                                        && l2.normalized_arrow().is_one();
                                    let code = format!("{h1} {h2}");
                                    let l = parse_gauss(&code).unwrap();
                                    if l.writhe() == 0
                                        && l.jones().is_one()
                                        && !l.normalized_arrow().is_one()
                                    {
                                        hits += 1;
                                        println!(
                                            "HIT halves_trivial=({h1_trivial},{h2_trivial}) {code}"
                                        );
                                        if hits < 3 {
                                            println!("  arrow = {}", l.normalized_arrow());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    println!("hits: {hits}");
}
