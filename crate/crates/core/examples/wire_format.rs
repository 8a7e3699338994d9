//! Reading and writing the JSON wire format.

use adjhopf::hopf::coproduct;
use adjhopf::wire::{lincomb_to_json, parse_document, parse_lincomb, tensor_to_json};

fn main() -> adjhopf::Result<()> {
    let text = r#"{"terms":[{"coeff":"2/4","graph":{"type":"adj","rows":[[0,1,0],[1,0,1],[0,1,0]]}},
                            {"coeff":"3","graph":{"type":"adj","rows":[[0,1],[1,0]]}}]}"#;
    let x = parse_lincomb(text)?;
    println!("{}", lincomb_to_json(&x));
    println!("{}", tensor_to_json(&coproduct(&x)?));

    match parse_document(r#"{"type":"adj","rows":[[0,1],[2,0]]}"#) {
        Ok(_) => println!("accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
