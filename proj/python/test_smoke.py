"""Smoke checks for the swsim python module."""

import swsim


def test_cells_and_netlist():
    names = swsim.cell_names()
    assert "detff_proposed" in names and "inverter" in names

    cell = swsim.build_cell("detff_proposed")
    assert cell.netlist.transistor_count == 18
    assert len(cell.clocked_devices) == 8
    assert cell.netlist.is_flat()

    text = swsim.serialize_netlist(cell.netlist)
    reparsed = swsim.parse_netlist(text)
    assert reparsed.transistor_count == 18


def test_simulate_inverter():
    cell = swsim.build_cell("inverter")
    stim = swsim.parse_stimulus("at 0ps a = 0\nat 1000ps a = 1\n")
    cfg = swsim.SimConfig()
    cfg.duration_ps = 5000
    trace = swsim.run(cell.netlist, stim, cfg)
    y = cell.netlist.find_net("y")
    assert y is not None
    assert trace.value_at(y, 4999) == swsim.LogicValue.Zero
    vcd = swsim.write_vcd(trace, cell.netlist, 1)
    assert vcd.startswith("$date")
    assert vcd == swsim.write_vcd(trace, cell.netlist, 1)


def test_characterize_and_compare():
    cell = swsim.build_cell("detff_proposed")
    tb = swsim.builtin_testbench("paper-sec3")
    res = swsim.characterize_cell(cell, tb)
    assert res.row.metrics.min_clk_to_q_ps == 135.0
    assert res.row.metrics.avg_power_uw > 0

    cmp = swsim.build_comparison(swsim.reference_rows())
    table = swsim.format_comparison_table(cmp)
    assert "48.1" in table and "Proposed" in table


def test_verify():
    cell = swsim.build_cell("detff_proposed")
    opts = swsim.VerifyOptions()
    opts.oracle = "detff"
    opts.cycles = 50
    opts.seed = 3
    assert swsim.verify_cell(cell, opts).passed


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")


if __name__ == "__main__":
    main()
