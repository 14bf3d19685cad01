# Independent grid search for the threshold exponent x and k (identity map, zeta0 = 1).
# Produces the frozen values in test_bounds.cpp. Needs mpmath.
from mpmath import mp, mpf, sqrt, pi, log, floor
mp.dps=40
def F(l, eps):
    rho = sqrt((1-l)**2 + (eps**2-l**2)/4)
    if rho >= 1: return None
    return 8*pi**2/((l**2-eps**2)*log(2)) + log(1-rho,2)
for eps in [mpf('0.5'), mpf('0.25')]:
    N=10000
    best=None
    for i in range(1,N+1):
        l = eps*i/(N+1)
        v=F(l,eps)
        if v is None: continue
        if best is None or v>best[0]: best=(v,l)
    # refine by golden section
    a=best[1]-eps/(N+1); b=best[1]+eps/(N+1)
    g=(sqrt(5)-1)/2
    for _ in range(200):
        c=b-g*(b-a); d=a+g*(b-a)
        if F(c,eps)>F(d,eps): b=d
        else: a=c
    l=(a+b)/2
    x=F(l,eps)
    print(eps, 'grid', best, 'refined l', l, 'x', x, 'k', 2-floor(x))
