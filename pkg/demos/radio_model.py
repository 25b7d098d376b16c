"""Walk the radio cost model: electronics floor, amplifier regimes, and
the crossover distance where the d^2 and d^4 terms meet."""

from amdiscnt import RadioParams, crossover_distance, rx_cost, tx_cost

radio = RadioParams()
d0 = crossover_distance(radio)

print("Radio constants")
print(f"  electronics   {radio.e_elec:.1e} J/bit")
print(f"  free space    {radio.e_fs:.1e} J/bit/m^2")
print(f"  multipath     {radio.e_mp:.1e} J/bit/m^4")
print(f"  aggregation   {radio.e_da:.1e} J/bit/signal")
print(f"  packet        {radio.packet_bits} bits")
print(f"  crossover     {d0:.4f} m")
print()

print(f"Cost to move one {radio.packet_bits}-bit packet")
print(f"  receive any distance: {rx_cost(radio.packet_bits, radio):.3e} J")
print(f"  {'distance':>8}  {'transmit':>12}  regime")
for d in (0, 10, 20, 35, 50, 70, d0, 100, 150, 300):
    regime = "free space" if d < d0 else "multipath"
    print(f"  {d:8.1f}  {tx_cost(radio.packet_bits, d, radio):12.3e}  {regime}")
print()

print("Why forwarding through a midpoint only pays off past the crossover:")
for total in (60.0, 100.0, 200.0):
    direct = tx_cost(radio.packet_bits, total, radio)
    relayed = (tx_cost(radio.packet_bits, total / 2, radio)
               + rx_cost(radio.packet_bits, radio)
               + tx_cost(radio.packet_bits, total / 2, radio))
    better = "relay" if relayed < direct else "direct"
    print(f"  {total:5.0f} m: direct {direct:.3e} J vs relayed {relayed:.3e} J -> {better}")
