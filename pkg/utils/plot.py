import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def plot_kernels(kernels, path, title=None):
    """
    Draws |K(q_out, q_in)| of each kernel matrix side by side.

    :param kernels: a list of (name, KernelMatrix) pairs on the same grid
    :param path: where to write the png
    """
    fig, axes = plt.subplots(1, len(kernels), figsize=(5 * len(kernels), 4.5), squeeze=False)
    for ax, (name, kernel) in zip(axes[0], kernels):
        grid = kernel.grid
        extent = (grid.q_min, grid.q_max, grid.q_min, grid.q_max)
        im = ax.imshow(np.abs(kernel.entries), origin="lower", extent=extent, aspect="auto",
                       interpolation="none")
        fig.colorbar(im, ax=ax)
        ax.set_title(name)
        ax.set_xlabel("q_in")
        ax.set_ylabel("q_out")
    if title is not None:
        fig.suptitle(title)
    plt.tight_layout()
    plt.savefig(path, format="png")
    plt.close(fig)
