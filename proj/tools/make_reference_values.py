#!/usr/bin/env python3
"""Generate independent reference values with mpmath for the test suite."""
import mpmath as mp

out = []

def emit(name, val, dps=40):
    with mp.workdps(dps):
        if isinstance(val, mp.mpc):
            out.append(f"{name}_re = {mp.nstr(val.real, dps)}")
            out.append(f"{name}_im = {mp.nstr(val.imag, dps)}")
        else:
            out.append(f"{name} = {mp.nstr(val, dps)}")

mp.mp.dps = 60

# first nontrivial zero ordinate
rho1 = mp.zetazero(1).imag
emit("first_zero_t", rho1, 45)

# zeta values
emit("zeta_half", mp.zeta(mp.mpf("0.5")), 45)
emit("zeta_p3_5i", mp.zeta(mp.mpc("0.3", "5")), 40)
emit("zeta_m15_73i", mp.zeta(mp.mpc("-1.5", "7.3")), 40)
emit("zeta_half_50i", mp.zeta(mp.mpc("0.5", "50")), 40)
emit("zeta_half_100i", mp.zeta(mp.mpc("0.5", "100")), 40)
emit("zeta_half_200i", mp.zeta(mp.mpc("0.5", "200")), 40)
emit("zeta_half_400i", mp.zeta(mp.mpc("0.5", "400")), 40)
emit("zeta_half_1000i", mp.zeta(mp.mpc("0.5", "1000")), 40)

# Riemann-Siegel theta
emit("theta_1", mp.siegeltheta(1), 40)
emit("theta_100", mp.siegeltheta(100), 40)
emit("theta_1000", mp.siegeltheta(1000), 40)

# Hardy Z
emit("Z_50", mp.siegelz(50), 40)
emit("Z_1000", mp.siegelz(1000), 40)

# constants
emit("euler_gamma", mp.euler, 55)
emit("stieltjes_1", mp.stieltjes(1), 55)

# log-gamma anchor
emit("loggamma_quarter_50i", mp.loggamma(mp.mpc("0.25", "50")), 40)

# chi(s) = 2^s pi^(s-1) sin(pi s/2) gamma(1-s)
def chi(s):
    return 2**s * mp.pi**(s - 1) * mp.sin(mp.pi * s / 2) * mp.gamma(1 - s)

emit("chi_p3_5i", chi(mp.mpc("0.3", "5")), 40)
emit("chi_half_50i", chi(mp.mpc("0.5", "50")), 40)

# Fresnel-type integral over [-1,1] of exp(i pi x^2)
fres = mp.quad(lambda x: mp.e**(1j * mp.pi * x * x), [-1, 0, 1])
emit("fresnel_m1_1", fres, 30)

print("slow integrals...")
mp.mp.dps = 30

# integral_0^100 Z(t)^2 dt  (panel per unit)
def z2(t):
    return mp.siegelz(t) ** 2
I = mp.mpf(0)
for k in range(100):
    I += mp.quad(z2, [k, k + 1])
emit("int_Z2_0_100", I, 25)

# integral_0^200 Z(t) zeta(1/2+it) dt
def zzeta(t):
    z = mp.zeta(mp.mpc(0.5, t))
    return mp.siegelz(t) * z
J = mp.mpc(0)
for k in range(200):
    J += mp.quad(zzeta, [k, k + 1])
emit("int_Zzeta_0_200", J, 25)

print("\n".join(out))
