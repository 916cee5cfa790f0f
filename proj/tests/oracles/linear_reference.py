#!/usr/bin/env python3
"""Trains the softmax-regression fixture with numpy and writes the expected
parameters next to it.

Usage: python3 tests/oracles/linear_reference.py [--check]
"""

import argparse
import json
import pathlib
import sys

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURE = ROOT / "tests" / "fixtures" / "classify" / "separable.json"
EXPECTED = ROOT / "tests" / "fixtures" / "classify" / "separable.expected.json"


def loss_and_grad(W, b, X, y, l2):
    n = X.shape[0]
    Z = X @ W.T + b
    Z = Z - Z.max(axis=1, keepdims=True)
    log_p = Z - np.log(np.exp(Z).sum(axis=1, keepdims=True))
    loss = -log_p[np.arange(n), y].mean() + l2 * (W * W).sum()
    R = np.exp(log_p)
    R[np.arange(n), y] -= 1.0
    return loss, R.T @ X / n + 2 * l2 * W, R.mean(axis=0)


def train(X, y, k, lr, epochs, l2, tol):
    W = np.zeros((k, X.shape[1]))
    b = np.zeros(k)
    loss, gW, gb = loss_and_grad(W, b, X, y, l2)
    history = [loss]
    for _ in range(epochs):
        W -= lr * gW
        b -= lr * gb
        prev = loss
        loss, gW, gb = loss_and_grad(W, b, X, y, l2)
        history.append(loss)
        if abs(prev - loss) < tol:
            break
    return W, b, history


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", action="store_true")
    args = parser.parse_args()
    fx = json.loads(FIXTURE.read_text())
    X = np.array(fx["points"], dtype=float)
    y = np.array(fx["labels"])
    W, b, history = train(X, y, len(fx["classes"]), 0.1, 300, 1e-4, 1e-6)
    content = json.dumps({
        "weights": W.tolist(), "bias": b.tolist(),
        "final_loss": history[-1], "steps": len(history) - 1,
    }, indent=1) + "\n"
    if args.check:
        return 0 if EXPECTED.read_text() == content else 1
    EXPECTED.write_text(content)
    return 0


if __name__ == "__main__":
    sys.exit(main())
