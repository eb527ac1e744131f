"""Print the MTTF sensitivity tables (alpha, beta, theta, gamma, eta) for the numerical example."""
from gldstandby.gld import REFERENCE_COMPONENT
from gldstandby.sensitivity import ParamId, Target, sensitivity_table
from gldstandby.sysrel import SystemConfig

NS = (2, 5, 10, 20)
GRIDS = {
    ParamId.ALPHA: [REFERENCE_COMPONENT.alpha],
    ParamId.BETA: [REFERENCE_COMPONENT.beta],
    ParamId.THETA: [0.3, 0.4, 0.5, 0.6, 0.7],
    ParamId.GAMMA_W: [1.2, 1.5, 1.8, 2.2, 2.5],
    ParamId.ETA: [1.5, 1.8, 2.2, 2.5, 3.0],
}


def main():
    base = SystemConfig(2, REFERENCE_COMPONENT)
    for param, values in GRIDS.items():
        table = sensitivity_table(Target.MTTF, param, values, NS, base)
        vals, ns, cells = table.grid()
        print(f"dMTTF/d{param.value}")
        print("value".ljust(8) + "".join(f"n={n}".rjust(12) for n in ns))
        for v, row in zip(vals, cells):
            print(f"{v:<8g}" + "".join(f"{c:12.4f}" for c in row))
        print()


if __name__ == "__main__":
    main()
