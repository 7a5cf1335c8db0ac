"""A short end-to-end run: data, training, evaluation and inference through the CLI.

Uses a reduced network and 32^3 phantoms so it finishes in a few minutes on
one core. The full-size setting is what ``runs/run_study.py`` trains.

    python3 demos/train_eval_infer.py [work_dir]
"""
import csv
import sys
import tempfile
from pathlib import Path

from vfseg.cli import main

work = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="vf_demo_"))
work.mkdir(parents=True, exist_ok=True)
config = work / "run.ini"
config.write_text("""\
[model]
input_shape = 16, 16, 16
base_channels = 4
embed_dim = 16
depth = 3
heads = 2
trainable_tail = 2
fusion_width = 4
norm_groups = 2

[train]
epochs = 30
crop = 16, 16, 16
val_every = 10
lr = 0.003

[data]
n_train = 6
n_val = 2
n_test = 2

[phantom]
dims = 32, 32, 32
""")


def run(*argv):
    print("$ vfseg", " ".join(argv))
    code = main(list(argv))
    if code:
        sys.exit(code)


run("phantom-gen", str(config), "--count", "10", "--out", str(work / "data"))
run("train", str(config), "--data", str(work / "data"), "--out", str(work / "run"))
run("eval", str(work / "run" / "best.ckpt"), str(work / "data"), "--split", "test",
    "--config", str(config), "--out", str(work / "report.csv"))
with open(work / "report.csv") as fh:
    for row in csv.reader(fh):
        print("   ", "  ".join(f"{c:>14}" for c in row))
run("infer", str(work / "run" / "best.ckpt"), str(work / "data" / "case_0009_img.vvf"),
    "--out", str(work / "pred" / "case_0009"))
