use genpos::*;

fn main() {
    // multipartite sweep k in {2,3}, parts 2..=4
    let mut partsets: Vec<Vec<usize>> = vec![];
    for a in (2..=4).rev() { for b in (2..=b_max(a)).rev() {
        partsets.push(vec![a, b]);
    }}
    fn b_max(a: usize) -> usize { a }
    for a in (2..=4usize).rev() { for b in (2..=a).rev() { for c in (2..=b).rev() {
        partsets.push(vec![a, b, c]);
    }}}
    for parts in partsets {
        let g = families::complete_multipartite(&parts).unwrap();
        let gp = gp_number(&g).unwrap().value;
        let sr = strong_resolving_graph(&g).unwrap();
        let om = clique_number(&sr).value;
        let n1 = parts[0];
        println!("K{:?}: gp={gp} omega_sr={om} n1={n1} ok={}", parts, gp == n1 && om == n1 && gp == om);
    }

    // strong bipartite sweep
    println!("--- strong bipartite (r1,t1)x(r2,t2), params <= 3, no K2 factor");
    let mut specs = vec![];
    for r1 in 1..=3usize { for t1 in 1..=r1 { if (r1,t1) != (1,1) { specs.push((r1,t1)); } } }
    for (i, &(r1,t1)) in specs.iter().enumerate() {
        for &(r2,t2) in &specs[i..] {
            let g1 = families::complete_bipartite(r1,t1).unwrap();
            let g2 = families::complete_bipartite(r2,t2).unwrap();
            let (p, _) = strong_product(&g1, &g2);
            let gp = gp_number(&p).unwrap().value;
            let om = clique_number(&strong_resolving_graph(&p).unwrap()).value;
            let al = independence_number(&p).value;
            let want = r1 * r2;
            println!("K{r1},{t1} x K{r2},{t2}: gp={gp} om={om} alpha={al} want={want} ok={}", gp==want && om==want && al==want);
        }
    }

    // check 12 pairs quickly: all connected pairs n <= 4
    println!("--- strong bounds sweep n<=4");
    let mut cat = vec![];
    for n in 1..=4 { cat.extend(enumerate_connected_graphs(n).unwrap()); }
    let mut bad = 0; let mut eq = 0; let mut strict = 0;
    for (i, g) in cat.iter().enumerate() {
        for h in &cat[i..] {
            let (p, _) = strong_product(g, h);
            let gp = gp_number(&p).unwrap().value;
            let (gg, gh) = (gp_number(g).unwrap().value, gp_number(h).unwrap().value);
            if gp < gg*gh || gp > (g.n()*gh).min(h.n()*gg) { bad += 1; println!("BAD pair!"); }
            if gp == gg*gh { eq += 1; } else { strict += 1; }
        }
    }
    println!("pairs: eq={eq} strict={strict} bad={bad}");
}
