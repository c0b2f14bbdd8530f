"""AWGN Monte-Carlo harness: modulation, symbol posteriors, frame loop.

Conventions (none of these are pinned down by the decoding algorithm, so
they are fixed here):

* A field symbol's bits are its coordinates over GF(2) in the polynomial
  basis of the field modulus (:meth:`GF.to_vector`).
* QPSK maps bits (b0, b1) to ((1 - 2 b0) + i (1 - 2 b1)) / sqrt(2).
  16-QAM maps (b0, b1) and (b2, b3) to Gray-coded 4-PAM levels
  00 -> -3, 01 -> -1, 11 -> 1, 10 -> 3 on I and Q, scaled by 1/sqrt(10).
  BPSK sends each bit as 1 - 2b.  All constellations have unit mean energy.
* Eb = Es / (rate * bits per channel symbol) with Es = 1, and the noise
  variance per real dimension is N0 / 2.
* Frame f draws from a Philox generator keyed by (seed, f): first the
  message, then the noise.  The same unit-variance noise is reused at
  every SNR point, so results do not depend on how frames are scheduled.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .decoder import DECODED, Decoder

MODULATIONS = ("bpsk", "qpsk", "qam16")

_PAM4 = {(0, 0): -3.0, (0, 1): -1.0, (1, 1): 1.0, (1, 0): 3.0}


@dataclass(frozen=True)
class ChannelConfig:
    modulation: str
    ebn0_db: float
    seed: int = 0
    frames: int = 1


@dataclass
class RunRecord:
    ebn0_db: float
    frames: int
    bit_errors: int
    frame_errors: int
    list_decodes: int
    bits_per_frame: int

    @property
    def ber(self):
        return self.bit_errors / (self.frames * self.bits_per_frame)

    @property
    def fer(self):
        return self.frame_errors / self.frames

    def as_dict(self):
        d = asdict(self)
        d.update(ber=self.ber, fer=self.fer)
        return d


class Modem:
    """Maps field symbols to channel signals and back to posteriors."""

    def __init__(self, F, modulation):
        modulation = modulation.lower()
        if modulation not in MODULATIONS:
            raise ValueError(f"unknown modulation {modulation!r}")
        if F.p != 2:
            raise ValueError("bit-based modulations need a field of characteristic 2")
        self.F, self.modulation = F, modulation
        self.bits_per_symbol = F.degree
        self.bits = np.array([F.to_vector(a) for a in F.elements()], dtype=np.int64)
        if modulation == "qpsk":
            if F.order != 4:
                raise ValueError("QPSK carries exactly the symbols of GF(4)")
            b = self.bits
            self.points = ((1 - 2 * b[:, 0]) + 1j * (1 - 2 * b[:, 1])) / np.sqrt(2)
            self.bits_per_channel_symbol = 2
        elif modulation == "qam16":
            if F.order != 16:
                raise ValueError("16-QAM carries exactly the symbols of GF(16)")
            re = [_PAM4[tuple(r[:2])] for r in self.bits.tolist()]
            im = [_PAM4[tuple(r[2:])] for r in self.bits.tolist()]
            self.points = (np.array(re) + 1j * np.array(im)) / np.sqrt(10)
            self.bits_per_channel_symbol = 4
        else:
            self.points = None
            self.bits_per_channel_symbol = 1

    @property
    def dims_per_symbol(self):
        """Real noise dimensions per field symbol."""
        return self.bits_per_symbol if self.modulation == "bpsk" else 2

    def noise_variance(self, ebn0_db, rate):
        """Noise variance per real dimension, N0 / 2."""
        eb = 1.0 / (rate * self.bits_per_channel_symbol)
        n0 = eb / 10 ** (ebn0_db / 10)
        return n0 / 2

    def modulate(self, codeword):
        cw = np.asarray(codeword, dtype=np.int64)
        if self.modulation == "bpsk":
            return (1 - 2 * self.bits[cw]).astype(float)  # shape (n, bits)
        return self.points[cw]

    def channel(self, signal, unit_noise, sigma2):
        """Add noise; ``unit_noise`` has shape (n, dims_per_symbol)."""
        s = np.sqrt(sigma2)
        if self.modulation == "bpsk":
            return signal + s * unit_noise
        return signal + s * (unit_noise[:, 0] + 1j * unit_noise[:, 1])

    def posteriors(self, received, sigma2):
        """Reliability matrix (q^2 x n) of symbol posteriors, uniform prior."""
        if self.modulation == "bpsk":
            r = np.asarray(received, dtype=float)  # (n, bits)
            # log P(bit = 0 | r) and log P(bit = 1 | r)
            llr = 2 * r / sigma2
            logp0 = -np.logaddexp(0, -llr)
            logp1 = -np.logaddexp(0, llr)
            b = self.bits  # (order, bits)
            logpi = b @ logp1.T + (1 - b) @ logp0.T  # (order, n)
        else:
            r = np.asarray(received)
            d2 = np.abs(r[None, :] - self.points[:, None]) ** 2
            logpi = -d2 / (2 * sigma2)
        logpi = logpi - logpi.max(axis=0, keepdims=True)
        pi = np.exp(logpi)
        return pi / pi.sum(axis=0, keepdims=True)


def frame_rng(seed, frame):
    return np.random.Generator(np.random.Philox(key=[frame, seed]))


def _bit_errors(modem, sent, got):
    diff = modem.bits[np.asarray(sent)] != modem.bits[np.asarray(got)]
    return int(diff.sum())


def _run_frames(code, modulation, ebn0_list, L, seed, frames):
    modem = Modem(code.F, modulation)
    decoder = Decoder(code, L)
    sigmas = [modem.noise_variance(s, code.rate) for s in ebn0_list]
    counts = [[0, 0, 0] for _ in ebn0_list]  # bit errors, frame errors, list decodes
    for f in frames:
        rng = frame_rng(seed, f)
        msg = rng.integers(0, code.F.order, size=code.k).tolist()
        noise = rng.standard_normal(size=(code.n, modem.dims_per_symbol))
        signal = modem.modulate(code.encode(msg))
        for c, sigma2 in zip(counts, sigmas):
            pi = modem.posteriors(modem.channel(signal, noise, sigma2), sigma2)
            res = decoder.decode(pi)
            be = _bit_errors(modem, msg, res.message)
            c[0] += be
            c[1] += int(res.message != msg)
            c[2] += int(res.status == DECODED)
    return counts


def _chunk_worker(args):
    return _run_frames(*args)


def run_simulation(code, ebn0_list, L, modulation="qpsk", frames=1000, seed=0, workers=1):
    """Simulate ``frames`` frames at each Eb/N0 (dB); one RunRecord per point."""
    if frames < 1:
        raise ValueError("frames must be at least 1")
    ebn0_list = [float(s) for s in ebn0_list]
    modem = Modem(code.F, modulation)
    if workers <= 1:
        counts = _run_frames(code, modulation, ebn0_list, L, seed, range(frames))
    else:
        bounds = np.linspace(0, frames, workers + 1).astype(int)
        jobs = [(code, modulation, ebn0_list, L, seed, range(a, b))
                for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        counts = [[0, 0, 0] for _ in ebn0_list]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_chunk_worker, jobs):
                for c, p in zip(counts, part):
                    for j in range(3):
                        c[j] += p[j]
    bits = code.k * modem.bits_per_symbol
    return [RunRecord(ebn0_db=s, frames=frames, bit_errors=c[0], frame_errors=c[1],
                      list_decodes=c[2], bits_per_frame=bits)
            for s, c in zip(ebn0_list, counts)]


def emit_tables(records, outdir, name):
    """Write ``name-FER.table``, ``name-BER.table`` and ``name.json`` to outdir."""
    os.makedirs(outdir, exist_ok=True)
    paths = {}
    for metric in ("FER", "BER"):
        path = os.path.join(outdir, f"{name}-{metric}.table")
        with open(path, "w") as fh:
            for r in records:
                fh.write(f"{r.ebn0_db:g} {getattr(r, metric.lower()):.6e}\n")
        paths[metric] = path
    path = os.path.join(outdir, f"{name}.json")
    with open(path, "w") as fh:
        json.dump({"name": name, "records": [r.as_dict() for r in records]}, fh, indent=2)
    paths["json"] = path
    return paths
