#!/usr/bin/env python3
# Copyright 2026 The TIG Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Trains the bundled MNIST-scale VAE + convnet pair and exports it.

Data source is the 5,000-digit MNIST subset shipped with mlxtend, so no
network access is needed. Outputs (into --out):

  vae.tigw, convnet.tigw          weights in the TIGW tensor archive format
  heldout-images.idx3-ubyte       1,100 held-out digits (IDX, uint8)
  heldout-labels.idx1-ubyte
  parity.json                     reference activations for the C++ tests
"""

import argparse
import json
import struct
from pathlib import Path

import numpy as np
import torch
import torch.nn.functional as F
from torch import nn

LATENT_DIM = 400
HELDOUT_PER_CLASS = 110


class Vae(nn.Module):
    def __init__(self):
        super().__init__()
        self.enc_fc = nn.Linear(784, 512)
        self.enc_mu = nn.Linear(512, LATENT_DIM)
        self.enc_logvar = nn.Linear(512, LATENT_DIM)
        self.dec_fc = nn.Linear(LATENT_DIM, 512)
        self.dec_out = nn.Linear(512, 784)

    def encode(self, x):
        h = F.relu(self.enc_fc(x))
        return self.enc_mu(h), self.enc_logvar(h)

    def decode(self, z):
        return torch.sigmoid(self.dec_out(F.relu(self.dec_fc(z))))

    def forward(self, x):
        mu, logvar = self.encode(x)
        z = mu + torch.randn_like(mu) * torch.exp(0.5 * logvar)
        return self.decode(z), mu, logvar


class ConvNet(nn.Module):
    def __init__(self):
        super().__init__()
        self.conv1 = nn.Conv2d(1, 8, 3, padding=1)
        self.conv2 = nn.Conv2d(8, 16, 3, padding=1)
        self.fc1 = nn.Linear(16 * 7 * 7, 64)
        self.fc2 = nn.Linear(64, 10)

    def forward(self, x):
        x = F.max_pool2d(F.relu(self.conv1(x)), 2)
        x = F.max_pool2d(F.relu(self.conv2(x)), 2)
        x = F.relu(self.fc1(x.flatten(1)))
        return self.fc2(x)


def write_tigw(path, tensors):
    with open(path, "wb") as f:
        f.write(b"TIGW")
        f.write(struct.pack("<II", 1, len(tensors)))
        for name, t in tensors:
            a = t.detach().cpu().numpy().astype("<f4")
            raw = name.encode()
            f.write(struct.pack("<I", len(raw)))
            f.write(raw)
            f.write(struct.pack("<I", a.ndim))
            f.write(struct.pack("<%dI" % a.ndim, *a.shape))
            f.write(a.tobytes(order="C"))


def write_idx(images_path, labels_path, images, labels):
    with open(images_path, "wb") as f:
        f.write(struct.pack(">IIII", 0x00000803, len(images), 28, 28))
        f.write(images.astype(np.uint8).tobytes())
    with open(labels_path, "wb") as f:
        f.write(struct.pack(">II", 0x00000801, len(labels)))
        f.write(labels.astype(np.uint8).tobytes())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="models/mnist_small")
    parser.add_argument("--vae-epochs", type=int, default=60)
    parser.add_argument("--cnn-epochs", type=int, default=25)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    from mlxtend.data import mnist_data

    torch.manual_seed(0)
    rng = np.random.default_rng(0)
    x_all, y_all = mnist_data()
    heldout = []
    for c in range(10):
        idx = np.flatnonzero(y_all == c)
        heldout.extend(rng.choice(idx, HELDOUT_PER_CLASS, replace=False))
    heldout = rng.permutation(np.array(heldout))
    train = np.setdiff1d(np.arange(len(y_all)), heldout)

    x_train = torch.tensor(x_all[train] / 255.0, dtype=torch.float32)
    y_train = torch.tensor(y_all[train], dtype=torch.long)

    vae = Vae()
    opt = torch.optim.Adam(vae.parameters(), lr=1e-3)
    for epoch in range(args.vae_epochs):
        perm = torch.randperm(len(x_train))
        total = 0.0
        for i in range(0, len(perm), 64):
            xb = x_train[perm[i:i + 64]]
            recon, mu, logvar = vae(xb)
            bce = F.binary_cross_entropy(recon, xb, reduction="sum")
            kld = -0.5 * torch.sum(1 + logvar - mu.pow(2) - logvar.exp())
            loss = (bce + kld) / len(xb)
            opt.zero_grad()
            loss.backward()
            opt.step()
            total += loss.item() * len(xb)
        print(f"vae epoch {epoch} loss {total / len(x_train):.2f}")

    cnn = ConvNet()
    opt = torch.optim.Adam(cnn.parameters(), lr=1e-3)
    images = x_train.view(-1, 1, 28, 28)
    for epoch in range(args.cnn_epochs):
        perm = torch.randperm(len(images))
        for i in range(0, len(perm), 64):
            xb = images[perm[i:i + 64]]
            yb = y_train[perm[i:i + 64]]
            # One-pixel random shifts keep the tiny training set from
            # being memorized outright.
            dx, dy = np.random.randint(-1, 2, size=2)
            xb = torch.roll(xb, shifts=(int(dy), int(dx)), dims=(2, 3))
            loss = F.cross_entropy(cnn(xb), yb)
            opt.zero_grad()
            loss.backward()
            opt.step()

    x_held = torch.tensor(x_all[heldout] / 255.0, dtype=torch.float32)
    y_held = y_all[heldout]
    with torch.no_grad():
        acc = (cnn(x_held.view(-1, 1, 28, 28)).argmax(1).numpy() == y_held).mean()
        mu, _ = vae.encode(x_held)
        recon_acc = (cnn(vae.decode(mu).view(-1, 1, 28, 28)).argmax(1).numpy()
                     == y_held).mean()
    print(f"convnet held-out accuracy {acc:.4f}; on VAE reconstructions {recon_acc:.4f}")

    write_tigw(out / "vae.tigw", [
        ("enc_fc.weight", vae.enc_fc.weight), ("enc_fc.bias", vae.enc_fc.bias),
        ("enc_mu.weight", vae.enc_mu.weight), ("enc_mu.bias", vae.enc_mu.bias),
        ("dec_fc.weight", vae.dec_fc.weight), ("dec_fc.bias", vae.dec_fc.bias),
        ("dec_out.weight", vae.dec_out.weight), ("dec_out.bias", vae.dec_out.bias),
    ])
    write_tigw(out / "convnet.tigw", [
        ("conv1.weight", cnn.conv1.weight), ("conv1.bias", cnn.conv1.bias),
        ("conv2.weight", cnn.conv2.weight), ("conv2.bias", cnn.conv2.bias),
        ("fc1.weight", cnn.fc1.weight), ("fc1.bias", cnn.fc1.bias),
        ("fc2.weight", cnn.fc2.weight), ("fc2.bias", cnn.fc2.bias),
    ])
    write_idx(out / "heldout-images.idx3-ubyte", out / "heldout-labels.idx1-ubyte",
              x_all[heldout], y_held)

    # Reference activations computed from the exported (uint8-quantized)
    # held-out images, so the C++ side can check forward-pass parity.
    with torch.no_grad():
        x_q = torch.tensor(np.round(x_all[heldout[:4]]) / 255.0, dtype=torch.float32)
        mu_q, _ = vae.encode(x_q)
        dec_q = vae.decode(mu_q)
        probs_q = F.softmax(cnn(x_q.view(-1, 1, 28, 28)), dim=1)
    parity = {
        "count": 4,
        "encoder_mean_head": mu_q[:, :8].tolist(),
        "decoded_pixels_head": dec_q[:, 300:316].tolist(),
        "classifier_probs": probs_q.tolist(),
    }
    (out / "parity.json").write_text(json.dumps(parity, indent=1))


if __name__ == "__main__":
    main()
