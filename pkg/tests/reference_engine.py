"""Straight-line re-derivation of the per-round accounting.

Replays the deterministic sector-clustering protocol on an already
deployed node list with everything written out inline: election, role
assignment, relay choice, and every energy charge. No engine code is
imported; only the shared domain containers are touched. Supports
loss-free links and unit-per-hop delay, which is all the tiny
cross-check scenarios need.
"""

from __future__ import annotations

import math


def _tx(bits, d, radio):
    if d < math.sqrt(radio.e_fs / radio.e_mp):
        return bits * (radio.e_elec + radio.e_fs * d * d)
    return bits * (radio.e_elec + radio.e_mp * d ** 4)


def _rx(bits, radio):
    return bits * radio.e_elec


def _charge(node, amount, ledger):
    if amount <= node.residual_energy:
        node.residual_energy -= amount
        ledger.append(amount)
        if node.residual_energy == 0.0:
            node.alive = False
        return True
    ledger.append(node.residual_energy)
    node.residual_energy = 0.0
    node.alive = False
    return False


def replay_rounds(nodes, config, n_rounds):
    """Run ``n_rounds`` of the sector-clustering protocol, loss-free.

    Returns one dict of metric fields per round, mutating the given
    nodes in place.
    """
    assert config.link_drop_probability == 0.0
    assert config.delay.mode == "hops"
    radio = config.radio
    bits = radio.packet_bits
    nodes = sorted(nodes, key=lambda n: n.id)
    out = []

    for round_index in range(n_rounds):
        if not any(n.alive for n in nodes):
            break

        # election: strongest alive node of each outer wedge
        heads = {}
        for node in nodes:
            if node.alive and not node.region.is_inner:
                cur = heads.get(node.region.sector)
                if cur is None or node.residual_energy > cur.residual_energy:
                    heads[node.region.sector] = node
        ch_ids = {n.id for n in heads.values()}

        # roles and routes
        members = {}   # member id -> head id
        routes = {}    # head id -> hop list ending in None (the sink)
        direct = []
        for node in nodes:
            if not node.alive or node.id in ch_ids:
                continue
            if node.region.is_inner:
                direct.append(node.id)
            else:
                members[node.id] = heads[node.region.sector].id
        for ch in sorted(ch_ids):
            ch_node = next(n for n in nodes if n.id == ch)
            d_direct = math.hypot(ch_node.position.x, ch_node.position.y)
            best = None
            best_cost = math.inf
            for cand in nodes:
                if not cand.alive or not cand.region.is_inner or cand.id == ch:
                    continue
                d1 = math.hypot(ch_node.position.x - cand.position.x,
                                ch_node.position.y - cand.position.y)
                d2 = math.hypot(cand.position.x, cand.position.y)
                cost = _tx(bits, d1, radio) + _tx(bits, d2, radio)
                if cost < best_cost:
                    best_cost = cost
                    best = cand.id
            if best is None or _tx(bits, d_direct, radio) <= best_cost:
                routes[ch] = [None]
            else:
                routes[ch] = [best, None]

        by_id = {n.id: n for n in nodes}
        ledger = []
        delays = []
        sent = received = 0
        arrived = {}
        member_delay = {}

        for mid in sorted(members):
            member = by_id[mid]
            if not member.alive:
                continue
            ch = by_id[members[mid]]
            d = math.hypot(member.position.x - ch.position.x,
                           member.position.y - ch.position.y)
            if not _charge(member, _tx(bits, d, radio), ledger):
                continue
            if not ch.alive:
                continue
            if not _charge(ch, _rx(bits, radio), ledger):
                continue
            arrived[ch.id] = arrived.get(ch.id, 0) + 1
            member_delay[ch.id] = max(member_delay.get(ch.id, 0.0), 1.0)

        for ch_id in sorted(routes):
            ch = by_id[ch_id]
            if not ch.alive:
                continue
            fused = arrived.get(ch_id, 0) + 1
            if not _charge(ch, bits * radio.e_da * fused, ledger):
                continue
            packet_delay = member_delay.get(ch_id, 0.0)
            sender = ch
            for hop in routes[ch_id]:
                if not sender.alive:
                    break
                if hop is None:
                    d = math.hypot(sender.position.x, sender.position.y)
                    if not _charge(sender, _tx(bits, d, radio), ledger):
                        break
                    sent += 1
                    received += 1
                    delays.append(packet_delay + 1.0)
                    break
                d = math.hypot(sender.position.x - by_id[hop].position.x,
                               sender.position.y - by_id[hop].position.y)
                if not _charge(sender, _tx(bits, d, radio), ledger):
                    break
                relay = by_id[hop]
                if not relay.alive:
                    break
                if not _charge(relay, _rx(bits, radio), ledger):
                    break
                packet_delay += 1.0
                sender = relay

        for node_id in sorted(direct):
            node = by_id[node_id]
            if not node.alive:
                continue
            d = math.hypot(node.position.x, node.position.y)
            if not _charge(node, _tx(bits, d, radio), ledger):
                continue
            sent += 1
            received += 1
            delays.append(1.0)

        alive = sum(1 for n in nodes if n.alive)
        out.append({
            "round_index": round_index,
            "alive": alive,
            "dead": len(nodes) - alive,
            "packets_sent_to_bs": sent,
            "packets_received_by_bs": received,
            "ch_count": len(routes),
            "mean_delay": math.fsum(delays) / len(delays) if delays else 0.0,
            "total_residual_energy": math.fsum(n.residual_energy for n in nodes),
            "energy_spent": math.fsum(ledger),
        })
    return out
