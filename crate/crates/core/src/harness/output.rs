use super::ber::BerPoint;
use crate::error::Result;
use crate::inforate::RatePoint;
use std::io::Write;

/// Column names shared by BER and rate output.
pub const CSV_HEADER: [&str; 8] = [
    "snr_o_db",
    "snr_e_db",
    "quantity",
    "receiver_or_method",
    "value",
    "ci_lo",
    "ci_hi",
    "meta",
];

/// Writes BER rows; the CI columns hold the Wilson 95% interval.
pub fn write_ber_csv<W: Write>(points: &[BerPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in points {
        w.write_record([
            p.snr_optical_db.to_string(),
            p.snr_electrical_db.to_string(),
            "ber".to_string(),
            p.receiver.to_string(),
            p.ber.to_string(),
            p.ci_lo.to_string(),
            p.ci_hi.to_string(),
            format!("errors={};bits={};frames={}", p.bit_errors, p.bits, p.frames),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes rate rows; the CI columns are `value -+ error estimate`.
pub fn write_rate_csv<W: Write>(points: &[RatePoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in points {
        w.write_record([
            p.snr_optical_db.to_string(),
            p.snr_electrical_db.to_string(),
            p.quantity.clone(),
            p.method.to_string(),
            p.value.to_string(),
            (p.value - p.error).to_string(),
            (p.value + p.error).to_string(),
            format!("input={};error={:e}", p.input, p.error),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_output_is_header_only() {
        let mut buf = Vec::new();
        write_rate_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "snr_o_db,snr_e_db,quantity,receiver_or_method,value,ci_lo,ci_hi,meta\n"
        );
    }
}
