use anyhow::{bail, Context, Result};
use edgepoly::families::{attach_four_cycle, Family};
use edgepoly::{io, Edge, Graph};

fn numbers(params: &[String]) -> Result<Vec<usize>> {
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .with_context(|| format!("bad size parameter `{p}`"))
        })
        .collect()
}

fn single(family: &str, params: &[String]) -> Result<usize> {
    match numbers(params)?.as_slice() {
        [n] => Ok(*n),
        _ => bail!("`{family}` takes exactly one size parameter"),
    }
}

pub fn build(family: &str, params: &[String], edge: Option<&str>) -> Result<Graph> {
    let family = match family {
        "complete" => Family::Complete(single(family, params)?),
        "multipartite" => Family::CompleteMultipartite(numbers(params)?),
        "cycle" => Family::Cycle(single(family, params)?),
        "path" => Family::Path(single(family, params)?),
        "tripan" => Family::TriPan(single(family, params)?),
        "attach" => {
            let [base] = params else {
                bail!("`attach` takes the base graph file");
            };
            let base = io::read_graph(base).with_context(|| format!("reading {base}"))?;
            let edge = edge.context("`attach` needs --edge u,v")?;
            let (u, v) = edge.split_once(',').context("--edge must look like u,v")?;
            let e = Edge::new(u.trim().parse()?, v.trim().parse()?)?;
            return Ok(attach_four_cycle(&base, e)?);
        }
        other => bail!("unknown family `{other}`"),
    };
    Ok(family.generate()?)
}
