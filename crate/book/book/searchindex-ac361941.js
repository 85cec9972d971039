window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#quick-taste","introduction.html#layout","simple-permutations.html#simple-permutations","simple-permutations.html#two-independent-computations","simple-permutations.html#growth","strong-interval-trees.html#strong-interval-trees","strong-interval-trees.html#the-bijection","strong-interval-trees.html#a-worked-example","strong-interval-trees.html#parameters","counting-by-leaves.html#counting-trees-by-leaves","counting-by-leaves.html#sanity-anchors","filtration.html#the-prime-degree-filtration","filtration.html#oracle-validation","parameters.html#parameters-and-cumulative-series","parameters.html#two-routes-one-answer","parameters.html#exact-averages-from-the-shell","certified-constants.html#certified-asymptotic-constants","certified-constants.html#interval-certification","certified-constants.html#asymptotic-counting","certified-constants.html#parameter-slopes","bounds.html#inequalities-and-limit-behaviour","bounds.html#a-clean-bound-on-s_n","bounds.html#brackets-for-the-singularity","bounds.html#the-approach-of-ρ_k-to-the-full-class","bounds.html#finite-size-effects","bounds.html#the-generic-engine","boltzmann.html#boltzmann-random-generation","boltzmann.html#the-sampler","boltzmann.html#tuning","boltzmann.html#validation","cli.html#command-line-reference","cli.html#enumeration","cli.html#analysis","cli.html#trees","cli.html#random-generation","cli.html#validation"],"index":{"documentStore":{"docInfo":{"0":{"body":128,"breadcrumbs":2,"title":1},"1":{"body":31,"breadcrumbs":3,"title":2},"10":{"body":173,"breadcrumbs":6,"title":3},"11":{"body":75,"breadcrumbs":5,"title":2},"12":{"body":147,"breadcrumbs":6,"title":3},"13":{"body":39,"breadcrumbs":5,"title":2},"14":{"body":32,"breadcrumbs":6,"title":3},"15":{"body":156,"breadcrumbs":7,"title":4},"16":{"body":33,"breadcrumbs":6,"title":3},"17":{"body":42,"breadcrumbs":6,"title":3},"18":{"body":126,"breadcrumbs":5,"title":2},"19":{"body":51,"breadcrumbs":5,"title":2},"2":{"body":75,"breadcrumbs":2,"title":1},"20":{"body":40,"breadcrumbs":5,"title":2},"21":{"body":23,"breadcrumbs":6,"title":3},"22":{"body":40,"breadcrumbs":6,"title":3},"23":{"body":67,"breadcrumbs":5,"title":2},"24":{"body":39,"breadcrumbs":7,"title":4},"25":{"body":51,"breadcrumbs":6,"title":3},"26":{"body":58,"breadcrumbs":5,"title":2},"27":{"body":42,"breadcrumbs":6,"title":3},"28":{"body":112,"breadcrumbs":4,"title":1},"29":{"body":33,"breadcrumbs":4,"title":1},"3":{"body":66,"breadcrumbs":4,"title":2},"30":{"body":103,"breadcrumbs":4,"title":1},"31":{"body":80,"breadcrumbs":6,"title":3},"32":{"body":71,"breadcrumbs":4,"title":1},"33":{"body":92,"breadcrumbs":4,"title":1},"34":{"body":32,"breadcrumbs":4,"title":1},"35":{"body":67,"breadcrumbs":5,"title":2},"36":{"body":27,"breadcrumbs":4,"title":1},"4":{"body":89,"breadcrumbs":5,"title":3},"5":{"body":23,"breadcrumbs":3,"title":1},"6":{"body":93,"breadcrumbs":6,"title":3},"7":{"body":45,"breadcrumbs":4,"title":1},"8":{"body":88,"breadcrumbs":5,"title":2},"9":{"body":31,"breadcrumbs":4,"title":1}},"docs":{"0":{"body":"sitlab is a library and command-line tool for working with strong\\ninterval trees: the canonical tree decomposition of a permutation into\\nnested intervals. The toolchain covers, end to end: the bijection between permutations and strong interval trees\\n( decompose / compose); exact enumeration of trees by number of leaves, for the full class,\\nfor the separable subclass, and for every intermediate class obtained\\nby bounding the arity of prime nodes; cumulative statistics (internal nodes, prime nodes, arity profiles,\\nsubtree size sums) computed two independent ways and checked\\ncoefficient by coefficient; certified interval enclosures for the singularity constants τ_k and ρ_k that govern the exponential growth of each class; a suite of inequality checks tracing how these constants behave as\\nthe arity bound k grows; a Boltzmann sampler producing uniform random trees of a target size,\\nwith statistical validation against the analytic predictions. Every analytic component is backed by a brute-force oracle at small\\nsizes: exhaustive permutation enumeration, exhaustive tree generation\\nand exact big-integer series arithmetic. The test suite (including a\\ndedicated acceptance suite) cross-checks each layer against the one\\nbelow it.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse sitlab::sit::{decompose, compose}; let p = \\"4 5 1 2 3\\".parse().unwrap();\\nlet t = decompose(&p);\\nassert_eq!(compose(&t).unwrap(), p); } The same operation from the shell: $ sitlab decompose \\"4 5 1 2 3\\"\\nMinus[Plus[leaf, leaf], Plus[leaf, leaf, leaf]]","breadcrumbs":"Introduction » Quick taste","id":"1","title":"Quick taste"},"10":{"body":"Because the bijection sends a permutation of size n to a tree with n leaves, counting permutations is the same as counting strong\\ninterval trees by leaves. The trees satisfy a one-line functional\\nequation. Write T(z) for the generating series of trees, z marking\\nleaves, and let λ_m = (number of allowed quotients of arity m) = 2 + s_m for m ≥ 4 (Plus, Minus, one per simple permutation) = 2 for m = 2, 3 (Plus, Minus only) with the degree series Λ(x) = Σ_{m≥2} λ_m x^m. If trees were\\nunrestricted this would give T = z + Λ(T) — but the normalization\\nrule (no linear child of the same sign under a linear parent) breaks\\nthe plain substitution. sitlab therefore works with the refined\\nsystem used everywhere in the crate: U = z + L + R (trees whose root is not a Plus node)\\nL = U² / (1 − U) (Minus-rooted: ≥2 children, none Minus-rooted)\\nR = Σ_j s_j P^j (Prime-rooted, one term per label arity)\\nP = U / (1 − U) (arbitrary child of a prime node) By symmetry the full count is P = z + 2L + R. The series U, L, R, P all have nonnegative integer coefficients and the system is\\nsolved by bootstrapping: coefficients of order n depend only on\\nsmaller orders. #![allow(unused)] fn main() {\\nuse sitlab::lambda::LambdaSpec;\\nuse sitlab::simples::SimpleCounts;\\nlet s = SimpleCounts::by_inversion(8);\\nlet lam = LambdaSpec::Schroeder.resolve(6, &s);\\nlet u = lam.bootstrap(6);\\nlet coeffs: Vec<i64> = (0..=6).map(|n| i64::try_from(u.coeff(n)).unwrap()).collect();\\nassert_eq!(coeffs, vec![0, 1, 1, 3, 11, 45, 197]); }","breadcrumbs":"Counting trees by leaves » Counting trees by leaves","id":"10","title":"Counting trees by leaves"},"11":{"body":"Two classes have famous counting sequences and pin the grammar down: All trees (every simple permutation allowed): the count of size- n\\ntrees is n!, since the bijection is with all permutations. No prime nodes at all ( Λ(x) = 2x²/(1−x), the separable\\npermutations): the counts are the large Schröder numbers halved, 1, 2, 6, 22, 90, 394, 1806, …. $ sitlab count --k schroeder --n-max 7 --format csv\\nn,count\\n1,1\\n2,2\\n3,6\\n4,22\\n5,90\\n6,394\\n7,1806 The oracle module regenerates these counts by exhaustively building\\nevery tree of each size and the test suite compares coefficient lists\\nexactly; the acceptance suite does so for seven different classes at\\nonce.","breadcrumbs":"Counting trees by leaves » Sanity anchors","id":"11","title":"Sanity anchors"},"12":{"body":"Between the separable class (no prime nodes) and the full class (all\\nprime labels) sits a natural increasing family: for each k ≥ 4, allow\\nprime nodes of arity at most k. Call the resulting class P^(k); its degree series truncates the prime tail, Λ_k(x) = 2x²/(1−x) + Σ_{j=4}^{k} s_j (x/(1−x))^j . As k grows the classes interpolate from separable ( k < 4) to all\\npermutations ( k = ∞): $ sitlab count --k 4 --n-max 6 --format csv\\nn,count\\n1,1\\n2,2\\n3,6\\n4,24\\n5,114\\n6,590 At size 4 the count 24 = 4! is complete (all permutations of size 4\\nare reachable once both simple permutations of size 4 are allowed), and\\nthe counts fall short of n! from size 5 on because the size-5 simple\\nlabels are missing. In the library, a class is described by a LambdaSpec: LambdaSpec::Schroeder — no prime nodes; LambdaSpec::Restricted(k) — prime arity at most k; LambdaSpec::Full — everything; LambdaSpec::Polynomial(coeffs) — an arbitrary user-supplied degree\\nseries, used by the generic solver behind limit-check. enumerate::class_series bootstraps the refined system for any spec\\nand returns both the U-level series (trees with non-Plus root, the\\nnatural unknown of the system) and the P-level series (all trees).\\nEverything downstream — cumulative parameters, constants, sampling — is\\nparametric in the spec, so one implementation serves the whole\\nfiltration.","breadcrumbs":"The prime-degree filtration » The prime-degree filtration","id":"12","title":"The prime-degree filtration"},"13":{"body":"oracle::exhaustive builds every tree of a given size for a given\\nspec by direct recursive generation (choose a root shape, split leaves\\namong children, recurse), entirely independent of the series\\nmachinery. The acceptance suite checks coefficients for schroeder, k = 4, …, 8 and the full class, for every size up to 8,\\nplus n! up to size 9.","breadcrumbs":"The prime-degree filtration » Oracle validation","id":"13","title":"Oracle validation"},"14":{"body":"For a statistic χ on trees (number of internal nodes, number of prime\\nnodes, number of nodes of a given arity, subtree size sum), the cumulative series is Ξ(z) = Σ_n ( Σ_{trees t of size n} χ(t) ) zⁿ , so that [zⁿ]Ξ / [zⁿ]P is the average of χ over size- n trees.","breadcrumbs":"Parameters and cumulative series » Parameters and cumulative series","id":"14","title":"Parameters and cumulative series"},"15":{"body":"sitlab computes every cumulative series twice, by genuinely different\\nmethods, and the test suite requires bit-exact agreement: Closed form ( enumerate::cumulative). Differentiating the\\nfunctional equation turns marking into a transfer: the cumulative\\nseries has the shape Ξ_U = H(U) · U′-plus-corrections, where H\\ndepends only on the statistic. The crate carries explicit closed\\nforms for internal nodes, prime nodes, fixed arity κ, and the\\nsubtree size sum, at both the U and P levels. These respect the\\nnormalization of the refined grammar — the honest forms, used for\\nall predictions. Marked grammar ( enumerate::cumulative_bivariate). Solve the\\nbivariate system with a second variable marking the statistic, as a\\nfirst-order dual number ( a + bε with ε² = 0), and read the ε-part. Nothing is shared with route 1 beyond the series\\narithmetic. #![allow(unused)] fn main() {\\nuse sitlab::enumerate::{cumulative, Level, Param};\\nuse sitlab::lambda::LambdaSpec;\\nuse sitlab::simples::SimpleCounts;\\nlet s = SimpleCounts::by_inversion(8);\\n// total number of internal nodes over all strong interval trees of size 3\\nlet c = cumulative(&LambdaSpec::Full, &s, Param::Internal, Level::P, 3).unwrap();\\nassert_eq!(c.coeff(3).to_string(), \\"10\\"); } (Of the six trees of size 3, the two monotone permutations give a\\nsingle linear node of arity 3 and the other four give chains of two\\ninternal nodes, so the total is 2·1 + 4·2 = 10. The oracle agrees.) A third, fully independent check compares the P-level series with oracle::exhaustive, which sums the statistic over explicitly\\ngenerated trees.","breadcrumbs":"Parameters and cumulative series » Two routes, one answer","id":"15","title":"Two routes, one answer"},"16":{"body":"$ sitlab stats-exact --k 7 --param internal --n-max 8 --format csv\\nn,count,cumulative,mean\\n... The mean column is the exact rational cumulative/count rendered to\\nthe requested number of digits. As n grows these averages approach slope · n for a computable constant — the subject of the next\\nchapter.","breadcrumbs":"Parameters and cumulative series » Exact averages from the shell","id":"16","title":"Exact averages from the shell"},"17":{"body":"For every class in the filtration the counting series has a\\nsquare-root singularity, and the number of size- n trees grows like P_n ~ γ_k / (1 − τ_k)² · ρ_k^{−n} · n^{−3/2} . Here τ_k is the value of the U-series at its singularity — the\\npositive solution of Λ_k′(τ) = 1 — and ρ_k = τ_k − Λ_k(τ_k) is the\\nsingular z. The amplitude comes from β_k = √(2ρ_k / Λ_k″(τ_k)) via γ_k = β_k / (2√π).","breadcrumbs":"Certified asymptotic constants » Certified asymptotic constants","id":"17","title":"Certified asymptotic constants"},"18":{"body":"Floating point cannot be trusted to ten significant digits across a\\nsweep of k, so asymptotics::solve_constants certifies everything\\nwith exact rational arithmetic: τ_k is bracketed by bisection in BigRational, with the predicate Λ′(x) ≥ 1 evaluated exactly from closed forms of Λ, Λ′, Λ″\\n(for the truncated classes these are finite sums in y = x/(1−x)). ρ_k inherits an enclosure: on the bracket, h(x) = x − Λ(x) has\\nderivative 1 − Λ′ vanishing at τ, so h at either endpoint is a\\nlower bound of ρ and the second-order term Λ″·width² caps the\\nerror. β_k and γ_k are carried as floating-point brackets wide enough\\nto absorb the rounding of the square roots. The result is an Enclosure { lo, hi } per constant, with guaranteed\\nwidth below 10⁻¹¹ at the default tolerance — tight enough to decide\\nevery tenth significant digit. $ sitlab constants --k-range 4..13 --format csv\\nk,tau_k,rho_k\\n4,0.2258458016,0.1454726242\\n5,0.2043553556,0.1364583031\\n6,0.1841224072,0.1277948169\\n7,0.1689470150,0.1210046261\\n8,0.1565912704,0.1152312243\\n9,0.1463252500,0.1102193554\\n10,0.1375961304,0.1057725122\\n11,0.1300393555,0.1017629085\\n12,0.1234001218,0.09810173370\\n13,0.1174959122,0.09472586491 These digits are certified: each is the rounding of an interval that\\nthe exact predicate proves correct. (A few published tabulations of ρ_k differ from these values in the last digit for k ∈ {6, 7, 10, 12, 13}; the enclosures here decide the digit.)","breadcrumbs":"Certified asymptotic constants » Interval certification","id":"18","title":"Interval certification"},"19":{"body":"asymptotics::asymptotic_count evaluates the singular approximation.\\nRather than the leading shape alone, it uses the exact coefficients of √(1 − z/ρ) (a two-term ratio recurrence), which keeps the relative\\nerror small even at very modest sizes: about 1% at size 10 for k = 8, and under 0.1% at size 30 for k = 4. Compare with the exact\\ncounts: $ sitlab count --k 8 --n-max 10\\n$ sitlab constants --k-range 8 --params","breadcrumbs":"Certified asymptotic constants » Asymptotic counting","id":"19","title":"Asymptotic counting"},"2":{"body":"The crate is a workspace with a single library + binary crate, crates/sitlab. Modules build on each other in this order: module provides perm permutations: parsing, display, lexicographic and random generation series exact BigInt power series arithmetic simples counts s_n of simple permutations, by inversion and by brute force sit strong interval trees, decompose/ compose, JSON and DOT output lambda the node-degree series Λ for each class enumerate class counting and cumulative parameter series oracle exhaustive generation used to validate everything above asymptotics certified constants, asymptotic counting, the bounds suite boltzmann tuned rejection sampling of random trees","breadcrumbs":"Introduction » Layout","id":"2","title":"Layout"},"20":{"body":"From the same constants, asymptotics::parameter_constants derives the\\nlinear-growth slopes of the cumulative parameters: the density of\\ninternal nodes, the density of prime nodes, and the constant in front\\nof n^{3/2} for the subtree size sum. These slopes come from the honest closed forms of the refined grammar (the same H functions as\\nin Parameters, evaluated at τ), and they are the\\nvalues the Boltzmann sampler’s empirical averages are tested against.","breadcrumbs":"Certified asymptotic constants » Parameter slopes","id":"20","title":"Parameter slopes"},"21":{"body":"The bounds subcommand sweeps k and evaluates a family of\\ninequalities that govern how the constants of the filtration approach\\nthe full class. Everything below is checked programmatically by the\\nacceptance suite over k = 4 … 100.","breadcrumbs":"Inequalities and limit behaviour » Inequalities and limit behaviour","id":"21","title":"Inequalities and limit behaviour"},"22":{"body":"For every computed n up to 300, ln s_n < ½ ln(2π) + (n + ½) ln n − n − 2 , i.e. the simple permutations stay below a Stirling-shaped curve with\\nconstant e⁻². The stirling subcommand reports the ratio s_n / (n!/e²) · √n-style reconciliation at selected sizes and its slow\\ndrift toward the limiting constant √(e/8π²) ≈ 0.18563.","breadcrumbs":"Inequalities and limit behaviour » A clean bound on s_n","id":"22","title":"A clean bound on s_n"},"23":{"body":"With τ̃_k = τ_k/(1 − τ_k), the quantity K(k) = k · s_k · τ̃_k^{k−1} controls the tail of Λ_k′ at the singularity. Two facts hold across\\nthe sweep: an upper bracket valid for every k ≥ 4 without tuning; a lower bracket at level α: K(k) ≥ α holds for all k ≥ 4 at α = 0.125. K(k) dips to ≈ 0.13 at k = 5, then increases\\nmonotonically, heading for the limit 1/(e−1) ≈ 0.582 — but very\\nslowly: it is still below 0.54 at k = 100, so levels near the limit\\nare not usable brackets at any practical k. Alongside these, τ̃_k < e/k holds from the start of the sweep, giving\\nthe elementary scale τ_k ≍ e/k.","breadcrumbs":"Inequalities and limit behaviour » Brackets for the singularity","id":"23","title":"Brackets for the singularity"},"24":{"body":"The singular points shrink like ρ_k · k / e = 1 − (5/2)·(ln k)/k + o((ln k)/k) . The report exposes the residual 1 − ρ_k k/e − (5/2)(ln k)/k; across k = 10 … 100 it stays below 0.07 in absolute value and decreases\\nmonotonically once k ≥ 25 (for smaller k the lower-order terms\\nstill fight).","breadcrumbs":"Inequalities and limit behaviour » The approach of ρ_k to the full class","id":"24","title":"The approach of ρ_k to the full class"},"25":{"body":"The ratios P_{n+1}/P_n converge to 1/ρ_k with a 3/(2n) correction\\nfrom the n^{−3/2} polynomial factor — at n = 60 the ratio is still\\nabout 2.5% away from its limit, which is worth knowing before reading\\ngrowth rates off short sequences. $ sitlab bounds --k-range 4..20 --format csv produces one row per k with the bracket values, the e/k tests, both\\nsides of each inequality and a pass flag per column, matching the\\nchecks above.","breadcrumbs":"Inequalities and limit behaviour » Finite-size effects","id":"25","title":"Finite-size effects"},"26":{"body":"limit-check exercises the same solver on a user-supplied degree\\nseries. Two instructive cases: $ sitlab limit-check --lambda seq --k-max 60\\n$ sitlab limit-check --lambda x2 --k-max 10 The first truncates Λ(x) = x²/(1−x) at degree k: the τ values\\ndecrease strictly to the separable-class constant 1 − 1/√2, reaching\\nit to within 10⁻⁸ by k = 60. The second, Λ(x) = x², has τ = 1/2, ρ = 1/4 exactly at every truncation — a fixed point the\\nsolver must not drift from.","breadcrumbs":"Inequalities and limit behaviour » The generic engine","id":"26","title":"The generic engine"},"27":{"body":"A Boltzmann sampler at parameter x draws each object of size n with\\nprobability proportional to xⁿ. Conditioned on its size, the output\\nis exactly uniform — so rejection until the size lands in a window\\naround a target N gives uniform random trees of (approximately) size N, in expected linear time per accepted tree when x is tuned near\\nthe singularity.","breadcrumbs":"Boltzmann random generation » Boltzmann random generation","id":"27","title":"Boltzmann random generation"},"28":{"body":"boltzmann::Sampler generates from the refined grammar directly. At a U-node it chooses leaf / Minus-rooted / Prime-rooted with the exact\\nbranch weights z : L : R evaluated at x; linear nodes draw a\\ngeometric number of children; prime nodes draw an arity from the\\nnormalized weights s_j P(x)^j and a uniformly random simple\\npermutation of that arity as label. The sign of a linear node is forced\\nwhen its parent is linear (normalization), otherwise a fair coin —\\nwith the branch weights adjusted so that each tree is produced by\\nexactly one derivation. Uniformity is therefore structural, not\\napproximate. The implementation uses an explicit task stack (no recursion, so\\nsize-10⁶ trees are fine), ChaCha12 for reproducible streams, and a\\nbudget cap on the total work per rejection round. Labels: by default trees are labeled with concrete simple permutations\\nup to arity 9 (the table the brute-force enumerator can produce);\\nlarger prime nodes carry an opaque label recording only the arity. --labels skeleton skips labels entirely.","breadcrumbs":"Boltzmann random generation » The sampler","id":"28","title":"The sampler"},"29":{"body":"boltzmann::tune_x picks x so that the expected size matches the\\ntarget, by bisection on the closed-form expectation. The sample\\nsubcommand does this automatically, and always prints the seed so runs\\ncan be reproduced: $ sitlab sample --k 7 --size 1000 --eps 0.1 --count 3 --seed 42 --format json","breadcrumbs":"Boltzmann random generation » Tuning","id":"29","title":"Tuning"},"3":{"body":"An interval (or block) of a permutation is a set of consecutive\\npositions whose values are also consecutive. Every permutation of size n has the trivial intervals: the n singletons and the whole word. A\\npermutation is simple when it has no others. For example 2 4 1 3\\nand 3 1 4 2 are the two simple permutations of size 4, while 2 1 4 3 is not simple (positions 1–2 form the block {1, 2}). By convention sizes 1 and 2 are not counted as simple; the counting\\nsequence starts s_4, s_5, s_6, ... = 2, 6, 46, 338, 2926, 28146, 298526, 3454434, ...","breadcrumbs":"Simple permutations » Simple permutations","id":"3","title":"Simple permutations"},"30":{"body":"Three layers of statistical checks, all in the acceptance suite: Structural validity. 10⁴ samples at k = 7, target 1000: every\\ntree passes validate() (normalization, arity bound, label\\nsimplicity) and lands in the size window. Exact uniformity. At size 5, k = 4 there are exactly 114\\ntrees. A χ² test over 10⁵ exact-size samples against the uniform\\ndistribution stays far below the 0.001 critical value (113 degrees\\nof freedom). Parameter densities. Empirical means of internal-node density,\\nprime-node density and the normalized subtree size sum over large\\nsamples agree with the analytic slopes of Certified constants to within a few\\npercent, and the modal prime arity at k = 7 is 7 — near the\\nsingularity the largest allowed arity dominates. $ sitlab sample-stats --k 7 --size 1000 --count 500 --seed 7 --format csv\\nparameter,empirical,theoretical,relative_error\\n...","breadcrumbs":"Boltzmann random generation » Validation","id":"30","title":"Validation"},"31":{"body":"All subcommands share a few conventions: --format csv|json|text (plus dot for trees); CSV comes with a\\nheader row. --out FILE writes the result to a file instead of stdout. --digits D controls significant digits of decimal output. --config FILE reads key = value defaults (one per line, #\\ncomments); explicit flags always win. Keys match the long flag names\\n( n-max = 8). Exit codes: 0 success, 1 domain error (invalid input values,\\ndivergent computation), 2 usage error (unknown flags, malformed\\nvalues). Sampling commands always print the seed in use, so every run is\\nreproducible even when the seed was drawn randomly.","breadcrumbs":"Command-line reference » Command-line reference","id":"31","title":"Command-line reference"},"32":{"body":"sitlab simples --n-max 12 [--brute-check] The counts s_n of simple permutations ( n,s_n). With --brute-check, sizes up to 10 are re-derived by exhaustive\\nenumeration and compared. sitlab count --k 7 --n-max 20 [--level p|u] Exact class counts ( n,count). --k accepts an integer k ≥ 4, schroeder, or full. Level u restricts to trees whose root is not\\na Plus node. sitlab stats-exact --k 7 --param internal --n-max 20 [--level p|u] Cumulative parameter table ( n,count,cumulative,mean). Parameters: internal, prime, sss, arity:K.","breadcrumbs":"Command-line reference » Enumeration","id":"32","title":"Enumeration"},"33":{"body":"sitlab constants --k-range 4..13 [--params] [--eps 1e-12] Certified constants, one row per k ( k,tau_k,rho_k). With --params the row extends to internal,prime,sss,beta_k,gamma_k — the parameter slopes and\\namplitude constants. sitlab bounds --k-range 4..30 [--alpha 0.58] [--beta 8] [--n 50] The inequality sweep of Inequalities: bracket values, e/k comparisons, residuals and pass flags, one row per k. sitlab limit-check --lambda seq --k-max 60\\nsitlab limit-check --lambda 0,0,1,2,1 --k-max 12 Truncation limits k,tau,rho for a generic degree series: seq is x²/(1−x), x2 is x², or give the coefficient list explicitly. sitlab stirling --n-list 10,30,100,300 Reconciliation of the simple-permutation counts against the\\nStirling-shaped bound.","breadcrumbs":"Command-line reference » Analysis","id":"33","title":"Analysis"},"34":{"body":"sitlab decompose \\"6 7 9 10 11 13 8 12 3 1 5 4 2\\" [--format text|json|dot]\\nsitlab compose \'<tree>\' # or: compose - (JSON from stdin) The bijection in both directions. decompose … --format json | sitlab compose - is the identity.","breadcrumbs":"Command-line reference » Trees","id":"34","title":"Trees"},"35":{"body":"sitlab sample --k 7 --size 1000 --count 10 [--seed S] [--eps 0.1] [--x X] [--labels skeleton|9] [--max-attempts A] Boltzmann samples in the size window [(1−eps)·size, (1+eps)·size].\\nThe control parameter x is tuned automatically from the target size\\nunless given. JSON output is a document with the seed, the tuned x\\nand the list of trees; dot emits one graph per tree. sitlab sample-stats --k 7 --size 1000 --count 500 --seed 7 Aggregates over a batch\\n( parameter,empirical,theoretical,relative_error), comparing the\\nempirical densities to the analytic slopes.","breadcrumbs":"Command-line reference » Random generation","id":"35","title":"Random generation"},"36":{"body":"sitlab verify --n-max 8 Re-runs the brute-force cross-checks (counts and all cumulative\\nparameters against exhaustive tree generation, for several classes)\\nand prints a pass/fail matrix. Exits 1 if anything disagrees.","breadcrumbs":"Command-line reference » Validation","id":"36","title":"Validation"},"4":{"body":"sitlab computes s_n two ways. Brute force ( simples::enumerate_simples) walks all n!\\npermutations and keeps the simple ones. This is exact but only feasible\\nfor n ≤ 10; it is the ground truth the fast method is checked\\nagainst. Functional inversion ( SimpleCounts::by_inversion) uses the fact\\nthat substituting the one-vertex tree series into the factorial series\\ninverts triangularly: the number of simple permutations of each size is\\ndetermined by smaller sizes and the factorials. This is quadratic in n and runs comfortably to n = 300 with exact big integers. #![allow(unused)] fn main() {\\nuse sitlab::simples::SimpleCounts;\\nlet s = SimpleCounts::by_inversion(6);\\nassert_eq!(s.get(4).to_string(), \\"2\\");\\nassert_eq!(s.get(6).to_string(), \\"46\\"); } From the command line, with the brute-force cross-check enabled: $ sitlab simples --n-max 8 --brute-check --format csv\\nn,s_n\\n4,2\\n5,6\\n6,46\\n7,338\\n8,2926","breadcrumbs":"Simple permutations » Two independent computations","id":"4","title":"Two independent computations"},"5":{"body":"The counts grow like n!/e² with a polynomial correction; the stirling subcommand and the bounds suite (see Inequalities and limit behaviour) track the constant in\\nfront and verify a clean logarithmic upper bound for every computed n.","breadcrumbs":"Simple permutations » Growth","id":"5","title":"Growth"},"6":{"body":"A strong interval of a permutation is an interval that overlaps no\\nother interval (any two strong intervals are disjoint or nested). The\\nstrong intervals therefore form a laminar family, and their containment\\norder is a tree: the strong interval tree. Its leaves are the n\\nsingletons; its root is the whole permutation. Each internal node carries the quotient of its children — the\\npermutation describing how the child blocks are arranged. The quotient\\nis always one of: Plus: increasing ( 1 2 … m), the children read left to right in\\nincreasing value ranges; Minus: decreasing ( m … 2 1); Prime: a simple permutation of size m ≥ 4. Plus and Minus nodes are linear; the tree is normalized so that a\\nlinear node never has a child that is linear of the same sign (such a\\nchild would merge into its parent). Prime nodes of arity m carry one\\nof the s_m simple permutations as a label.","breadcrumbs":"Strong interval trees » Strong interval trees","id":"6","title":"Strong interval trees"},"7":{"body":"decompose computes the tree of a permutation in quadratic time; compose rebuilds the permutation. They are mutually inverse on all\\ninputs — the acceptance suite verifies this exhaustively through size 7\\n(5913 permutations) and on a thousand random permutations of size 200. #![allow(unused)] fn main() {\\nuse sitlab::sit::{decompose, compose, tree_params};\\nlet p = \\"4 5 1 2 3\\".parse().unwrap();\\nlet t = decompose(&p);\\nassert_eq!(compose(&t).unwrap(), p);\\nassert_eq!(tree_params(&t).leaves, 5); }","breadcrumbs":"Strong interval trees » The bijection","id":"7","title":"The bijection"},"8":{"body":"The permutation 6 7 9 10 11 13 8 12 3 1 5 4 2 has the tree Minus\\n├── Plus\\n│ ├── leaf\\n│ ├── leaf\\n│ └── Prime(2 4 1 3)\\n│ ├── Plus[leaf, leaf, leaf]\\n│ ├── leaf\\n│ ├── leaf\\n│ └── leaf\\n└── Prime(3 1 4 2) ├── leaf ├── leaf ├── Minus[leaf, leaf] └── leaf From the shell: $ sitlab decompose \\"6 7 9 10 11 13 8 12 3 1 5 4 2\\"\\nMinus[Plus[leaf, leaf, Prime(2 4 1 3)[Plus[leaf, leaf, leaf], leaf, leaf, leaf]], Prime(3 1 4 2)[leaf, leaf, Minus[leaf, leaf], leaf]] --format json produces a machine-readable nesting that compose -\\naccepts back on stdin, and --format dot renders the tree for\\nGraphviz.","breadcrumbs":"Strong interval trees » A worked example","id":"8","title":"A worked example"},"9":{"body":"tree_params reads off the statistics studied throughout this guide:\\nleaf count, number of internal nodes, number of prime nodes, the arity\\nhistogram, the largest prime arity, and the subtree size sum — the\\nsum over all nodes of the number of leaves below them, a measure of how\\nbalanced the tree is.","breadcrumbs":"Strong interval trees » Parameters","id":"9","title":"Parameters"}},"length":37,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{",":{"0":{",":{"1":{",":{"2":{",":{"1":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{".":{"=":{"6":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"1":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"7":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"1":{"2":{"5":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"3":{"df":1,"docs":{"23":{"tf":1.0}}},"8":{"5":{"6":{"3":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"19":{"tf":1.0},"29":{"tf":1.0},"35":{"tf":1.0}}},"5":{"4":{"df":1,"docs":{"23":{"tf":1.0}}},"8":{"2":{"df":1,"docs":{"23":{"tf":1.0}}},"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"15":{"tf":1.0},"31":{"tf":1.0}}},"1":{"+":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{")":{"df":0,"docs":{},"·":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"35":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},",":{"1":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}},"/":{"(":{"df":0,"docs":{},"e":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}},"2":{"df":1,"docs":{"26":{"tf":1.0}}},"4":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{},"ρ":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"√":{"2":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}},"0":{",":{"0":{".":{"1":{"3":{"7":{"5":{"9":{"6":{"1":{"3":{"0":{"4":{",":{"0":{".":{"1":{"0":{"5":{"7":{"7":{"2":{"5":{"1":{"2":{"2":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"0":{",":{"1":{"0":{"0":{",":{"3":{"0":{"0":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":3,"docs":{"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"35":{"tf":1.4142135623730951}}},"df":3,"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}},"df":12,"docs":{"15":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"32":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"1":{",":{"0":{".":{"1":{"3":{"0":{"0":{"3":{"9":{"3":{"5":{"5":{"5":{",":{"0":{".":{"1":{"0":{"1":{"7":{"6":{"2":{"9":{"0":{"8":{"5":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"df":1,"docs":{"30":{"tf":1.0}}},"4":{"df":1,"docs":{"30":{"tf":1.0}}},"df":3,"docs":{"10":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"2":{",":{"0":{".":{"1":{"2":{"3":{"4":{"0":{"0":{"1":{"2":{"1":{"8":{",":{"0":{".":{"0":{"9":{"8":{"1":{"0":{"1":{"7":{"3":{"3":{"7":{"0":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"18":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"3":{",":{"0":{".":{"1":{"1":{"7":{"4":{"9":{"5":{"9":{"1":{"2":{"2":{",":{"0":{".":{"0":{"9":{"4":{"7":{"2":{"5":{"8":{"6":{"4":{"9":{"1":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"18":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"8":{"0":{"6":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"7":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":16,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":2.23606797749979},"31":{"tf":1.0},"34":{"tf":1.0},"36":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":2.449489742783178}},"e":{"df":1,"docs":{"33":{"tf":1.0}}},"–":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"−":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{")":{"df":0,"docs":{},"·":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"35":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"2":{")":{"[":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},",":{"2":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}},".":{"5":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":1,"docs":{"32":{"tf":1.4142135623730951}}},"2":{"df":1,"docs":{"11":{"tf":1.0}}},"4":{"df":1,"docs":{"12":{"tf":1.0}}},"5":{"df":1,"docs":{"24":{"tf":1.0}}},"8":{"1":{"4":{"6":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"2":{"6":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"8":{"5":{"2":{"6":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":12,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"11":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":2.449489742783178},"31":{"tf":1.0},"34":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"l":{"df":1,"docs":{"10":{"tf":1.0}}},"x":{"df":0,"docs":{},"²":{"/":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"x":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"·":{"1":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"ρ":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}},"3":{"\\"":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"[":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"[":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},",":{"6":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}},"/":{"(":{"2":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":2,"docs":{"22":{"tf":1.0},"4":{"tf":1.0}}},"df":1,"docs":{"19":{"tf":1.0}}},"3":{"8":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"4":{"5":{"4":{"4":{"3":{"4":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"4":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":7,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"34":{"tf":1.0},"8":{"tf":1.7320508075688772}}},"4":{",":{"0":{".":{"2":{"2":{"5":{"8":{"4":{"5":{"8":{"0":{"1":{"6":{",":{"0":{".":{"1":{"4":{"5":{"4":{"7":{"2":{"6":{"2":{"4":{"2":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"2":{"df":1,"docs":{"11":{"tf":1.0}}},"4":{"df":1,"docs":{"12":{"tf":1.0}}},"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},".":{".":{"1":{"3":{"df":2,"docs":{"18":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}},"2":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"3":{"0":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":1,"docs":{"29":{"tf":1.0}}},"5":{"df":1,"docs":{"10":{"tf":1.0}}},"6":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}},"df":14,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":2.6457513110645907},"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"3":{"tf":2.0},"30":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.449489742783178}},"·":{"2":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"5":{",":{"0":{".":{"2":{"0":{"4":{"3":{"5":{"5":{"3":{"5":{"5":{"6":{",":{"0":{".":{"1":{"3":{"6":{"4":{"5":{"8":{"3":{"0":{"3":{"1":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{"1":{"4":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"df":1,"docs":{"4":{"tf":1.0}}},"9":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"2":{")":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"·":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":2,"docs":{"30":{"tf":1.0},"35":{"tf":1.0}}},"df":1,"docs":{"33":{"tf":1.0}}},"9":{"1":{"3":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":7,"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"23":{"tf":1.0},"30":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}},"6":{",":{"0":{".":{"1":{"8":{"4":{"1":{"2":{"2":{"4":{"0":{"7":{"2":{",":{"0":{".":{"1":{"2":{"7":{"7":{"9":{"4":{"8":{"1":{"6":{"9":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"9":{"4":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"6":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"5":{"9":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":3,"docs":{"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"33":{"tf":1.0}}},"df":6,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"7":{",":{"0":{".":{"1":{"6":{"8":{"9":{"4":{"7":{"0":{"1":{"5":{"0":{",":{"0":{".":{"1":{"2":{"1":{"0":{"0":{"4":{"6":{"2":{"6":{"1":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{"8":{"0":{"6":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"3":{"8":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":2.23606797749979},"32":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"8":{",":{"0":{".":{"1":{"5":{"6":{"5":{"9":{"1":{"2":{"7":{"0":{"4":{",":{"0":{".":{"1":{"1":{"5":{"2":{"3":{"1":{"2":{"2":{"4":{"3":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"9":{"2":{"6":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":9,"docs":{"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"31":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"9":{",":{"0":{".":{"1":{"4":{"6":{"3":{"2":{"5":{"2":{"5":{"0":{"0":{",":{"0":{".":{"1":{"1":{"0":{"2":{"1":{"9":{"3":{"5":{"5":{"4":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":1,"docs":{"11":{"tf":1.0}}},"df":4,"docs":{"13":{"tf":1.0},"28":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"_":{"df":0,"docs":{},"j":{"df":1,"docs":{"10":{"tf":1.0}}},"k":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"12":{"tf":1.0}}},"τ":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}},"/":{"(":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"k":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"−":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":5,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":3.0},"18":{"tf":2.23606797749979},"23":{"tf":2.23606797749979},"24":{"tf":1.4142135623730951}},"″":{"(":{"df":0,"docs":{},"τ":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"m":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"n":{"df":1,"docs":{"14":{"tf":1.0}}},"u":{"df":1,"docs":{"15":{"tf":1.0}}},"{":{"df":0,"docs":{},"j":{"=":{"4":{"df":0,"docs":{},"}":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"k":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"≥":{"2":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"a":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":2,"docs":{"2":{"tf":1.0},"25":{"tf":1.0}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"r":{"b":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"j":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"35":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"30":{"tf":1.0}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"30":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}},"g":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"h":{"a":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"y":{"df":3,"docs":{"29":{"tf":1.0},"31":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":2,"docs":{"17":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"30":{"tf":1.0},"35":{"tf":1.0}}}}}},"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"19":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}}}}}}}},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.0},"12":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}}}}}},"i":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"28":{"tf":2.0},"30":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"y":{":":{"df":0,"docs":{},"k":{"df":1,"docs":{"32":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"c":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"(":{"3":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"10":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"4":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.4142135623730951}},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"29":{"tf":1.0},"35":{"tf":1.0}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"b":{"a":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"35":{"tf":1.0}}}},"df":0,"docs":{}}},"df":1,"docs":{"15":{"tf":1.0}},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":8,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"a":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"g":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"3":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"z":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"x":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":5,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"10":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"25":{"tf":1.0},"34":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"18":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"33":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.7320508075688772}}}}}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"p":{"df":2,"docs":{"18":{"tf":1.0},"28":{"tf":1.0}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":5,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}}}}}},"h":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"1":{"2":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":12,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"30":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":2,"docs":{"13":{"tf":1.0},"28":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":11,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":2.23606797749979},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"26":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":4,"docs":{"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"10":{"tf":1.0}},"i":{"c":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.0}}}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"25":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"31":{"tf":1.0}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"32":{"tf":1.0},"35":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}},"s":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"34":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"u":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":13,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.7320508075688772},"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"31":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":15,"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":2.23606797749979},"12":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.4142135623730951},"30":{"tf":1.0},"32":{"tf":1.7320508075688772},"33":{"tf":1.0},"35":{"tf":1.4142135623730951},"36":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951}},"s":{"/":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"a":{"b":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":8,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}},"|":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"|":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}}}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"/":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":8,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"d":{"df":1,"docs":{"31":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}},"df":0,"docs":{},"m":{"df":1,"docs":{"31":{"tf":1.0}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"34":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"e":{"(":{"&":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":3,"docs":{"24":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":3,"docs":{"18":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0}}}}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":6,"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"26":{"tf":1.4142135623730951},"30":{"tf":1.0},"33":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":3,"docs":{"20":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772},"35":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":4,"docs":{"18":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"18":{"tf":2.23606797749979},"31":{"tf":1.4142135623730951}}}}},"p":{"df":1,"docs":{"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"34":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"o":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"30":{"tf":1.0}}}}},"t":{"df":4,"docs":{"2":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0},"8":{"tf":1.0}}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":2,"docs":{"27":{"tf":1.0},"28":{"tf":1.4142135623730951}},"n":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"26":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"/":{"8":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"k":{"df":3,"docs":{"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"33":{"tf":1.0}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":2,"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":3,"docs":{"20":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}}},"n":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.7320508075688772}}}}}}}},"d":{"df":1,"docs":{"0":{"tf":1.4142135623730951}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"28":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":4,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}}}}}}},"p":{"df":3,"docs":{"29":{"tf":1.0},"33":{"tf":1.0},"35":{"tf":1.0}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"31":{"tf":1.4142135623730951}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":5,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"31":{"tf":1.0}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}}}},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":6,"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"31":{"tf":1.0},"36":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"27":{"tf":1.0},"29":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"15":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"15":{"tf":1.0},"33":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}},"i":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":3,"docs":{"12":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"11":{"tf":1.0}}}}},"r":{"df":1,"docs":{"30":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"w":{"df":3,"docs":{"18":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.7320508075688772}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"26":{"tf":1.0}}}}},"x":{"df":2,"docs":{"15":{"tf":1.0},"26":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":3,"docs":{"25":{"tf":1.0},"31":{"tf":1.7320508075688772},"33":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"n":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"c":{"df":5,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":11,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":6,"docs":{"15":{"tf":1.7320508075688772},"18":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"5":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"32":{"tf":1.0}},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":9,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"28":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":5,"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"33":{"tf":1.0}},"n":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"35":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"35":{"tf":1.0}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"(":{"df":0,"docs":{},"u":{"df":1,"docs":{"15":{"tf":1.0}}},"x":{"df":1,"docs":{"18":{"tf":1.0}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":3,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}},"e":{"a":{"d":{"df":1,"docs":{"23":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"17":{"tf":1.0},"18":{"tf":1.0}}}}},"i":{"df":1,"docs":{"18":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"i":{".":{"df":1,"docs":{"22":{"tf":1.0}}},"6":{"4":{":":{":":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"u":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"(":{"df":0,"docs":{},"n":{")":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"28":{"tf":1.0}}}}}}}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":3,"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":5,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"31":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0}}},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{",":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{",":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{",":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"_":{"df":0,"docs":{},"k":{",":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":9,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"v":{"df":7,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":2.449489742783178}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":3,"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"2":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.4142135623730951},"35":{"tf":1.0},"8":{"tf":1.0}}}}}},"k":{"(":{"df":0,"docs":{},"k":{"df":1,"docs":{"23":{"tf":1.7320508075688772}}}},")":{"/":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},",":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"u":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"_":{"df":0,"docs":{},"k":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"k":{"df":2,"docs":{"18":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"/":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":17,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":2.6457513110645907},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":2.0},"21":{"tf":1.4142135623730951},"23":{"tf":2.449489742783178},"24":{"tf":2.0},"25":{"tf":1.4142135623730951},"26":{"tf":2.0},"29":{"tf":1.0},"30":{"tf":2.0},"32":{"tf":2.0},"33":{"tf":2.449489742783178},"35":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"19":{"tf":1.0},"4":{"tf":1.0}}}},"y":{"df":1,"docs":{"31":{"tf":1.4142135623730951}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":6,"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"28":{"tf":2.449489742783178},"30":{"tf":1.0},"35":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{},"m":{".":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{"6":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"b":{"d":{"a":{"df":3,"docs":{"2":{"tf":1.0},"26":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"(":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"(":{"df":0,"docs":{},"k":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"s":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"12":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"(":{"6":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"d":{"df":2,"docs":{"27":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"11":{"tf":1.0},"30":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"30":{"tf":1.0},"9":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":2,"docs":{"10":{"tf":1.7320508075688772},"28":{"tf":1.0}},"e":{"a":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{},"f":{"df":4,"docs":{"1":{"tf":1.7320508075688772},"28":{"tf":1.0},"8":{"tf":4.47213595499958},"9":{"tf":1.0}}},"v":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"df":4,"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951},"32":{"tf":1.7320508075688772}}}}},"x":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":7,"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"33":{"tf":1.7320508075688772},"5":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":6,"docs":{"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772}}}},"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"33":{"tf":1.4142135623730951},"35":{"tf":1.0}}}}},"n":{"(":{"2":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"22":{"tf":1.4142135623730951}}},"o":{"df":1,"docs":{"18":{"tf":1.0}},"g":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}},"l":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"k":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.7320508075688772}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":3,"docs":{"25":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"x":{"df":11,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"26":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}},"df":2,"docs":{"10":{"tf":1.7320508075688772},"6":{"tf":2.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"30":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"6":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":4,"docs":{"10":{"tf":2.0},"28":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"s":{"[":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"[":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"df":2,"docs":{"1":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"12":{"tf":1.0}}}}},"o":{"d":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"2":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"!":{"/":{"df":0,"docs":{},"e":{"df":2,"docs":{"22":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}},",":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{",":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{",":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"32":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"n":{"df":2,"docs":{"32":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}},"^":{"df":0,"docs":{},"{":{"3":{"/":{"2":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"−":{"3":{"/":{"2":{"df":2,"docs":{"17":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.4142135623730951}}}}}},"df":19,"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":2.23606797749979},"25":{"tf":1.0},"27":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":2.23606797749979},"5":{"tf":1.0},"6":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"23":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":13,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.7320508075688772},"15":{"tf":2.23606797749979},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"28":{"tf":2.23606797749979},"30":{"tf":1.4142135623730951},"32":{"tf":1.0},"6":{"tf":2.0},"9":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}},"e":{"df":1,"docs":{"10":{"tf":1.0}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":5,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"28":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.7320508075688772}}}}},"df":0,"docs":{}}}},"o":{"(":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"24":{"tf":1.0}}},"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.4142135623730951},"35":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}},"p":{"a":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0}},"e":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"30":{"tf":1.4142135623730951},"35":{"tf":1.0},"9":{"tf":1.0}},"l":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"p":{"(":{"df":0,"docs":{},"x":{")":{"^":{"df":0,"docs":{},"j":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"^":{"(":{"df":0,"docs":{},"k":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{},"j":{"df":1,"docs":{"10":{"tf":1.0}}}},"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":0,"docs":{},"}":{"/":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":5,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"t":{"df":9,"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"27":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{",":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"l":{",":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"l":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"30":{"tf":1.0},"35":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}}}},"s":{"df":1,"docs":{"2":{"tf":1.0}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"36":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":3,"docs":{"25":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}}},"df":5,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"df":8,"docs":{"10":{"tf":1.4142135623730951},"18":{"tf":1.0},"25":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.4142135623730951},"35":{"tf":1.0}},"m":{"df":1,"docs":{"2":{"tf":1.0}},"u":{"df":0,"docs":{},"t":{"df":15,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":2.0},"32":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979},"7":{"tf":2.0},"8":{"tf":1.0}}}}}}},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"df":8,"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"s":{"[":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"df":2,"docs":{"1":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"18":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":2,"docs":{"25":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"3":{"tf":1.4142135623730951}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"18":{"tf":1.4142135623730951}},"t":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"(":{"2":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"3":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":12,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":2.449489742783178},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.7320508075688772},"30":{"tf":1.4142135623730951},"32":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"29":{"tf":1.0},"31":{"tf":1.0},"36":{"tf":1.0}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"u":{"c":{"df":4,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}},"i":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"df":0,"docs":{}},"|":{"df":0,"docs":{},"u":{"df":1,"docs":{"32":{"tf":1.4142135623730951}}}}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":5,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":5,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}},"i":{"df":0,"docs":{},"o":{"df":3,"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951}},"n":{"df":2,"docs":{"16":{"tf":1.0},"18":{"tf":1.0}}}}}}},"df":2,"docs":{"10":{"tf":2.0},"28":{"tf":1.0}},"e":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"26":{"tf":1.0}}}},"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":5,"docs":{"15":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}}}},"df":0,"docs":{}},"r":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}},"s":{"df":2,"docs":{"13":{"tf":1.4142135623730951},"28":{"tf":1.0}}}}}},"df":2,"docs":{"32":{"tf":1.0},"36":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"19":{"tf":1.0}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"24":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":3,"docs":{"28":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":2,"docs":{"24":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":3,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"31":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":8,"docs":{"10":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"28":{"tf":1.4142135623730951},"32":{"tf":1.0},"6":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"28":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"w":{"df":3,"docs":{"25":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.7320508075688772}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"df":4,"docs":{"29":{"tf":1.0},"31":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}}},"s":{"_":{"4":{"df":1,"docs":{"3":{"tf":1.0}}},"5":{"df":1,"docs":{"3":{"tf":1.0}}},"6":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{},"j":{"df":3,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"28":{"tf":1.0}}},"k":{"df":1,"docs":{"23":{"tf":1.0}}},"m":{"df":2,"docs":{"10":{"tf":1.0},"6":{"tf":1.0}}},"n":{"df":4,"docs":{"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"32":{"tf":1.0},"4":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"26":{"tf":1.0},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":6,"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"29":{"tf":1.4142135623730951},"30":{"tf":2.0},"31":{"tf":1.0},"35":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.0}},"’":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"32":{"tf":1.0}}}}},"df":0,"docs":{}}},"ö":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":4,"docs":{"10":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"35":{"tf":1.0},"4":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"d":{"df":4,"docs":{"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"35":{"tf":1.7320508075688772}}},"df":1,"docs":{"5":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"26":{"tf":1.0}}}},"df":0,"docs":{}},"q":{"df":2,"docs":{"26":{"tf":1.0},"33":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"11":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"12":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.0},"17":{"tf":1.4142135623730951},"2":{"tf":2.0},"26":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"v":{"df":1,"docs":{"12":{"tf":1.0}}}},"t":{"df":1,"docs":{"3":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}},"r":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":5,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"31":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"8":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"25":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"31":{"tf":1.0}}},"df":0,"docs":{}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":11,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":2.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"b":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"6":{"df":1,"docs":{"4":{"tf":1.0}}},"8":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"i":{"c":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"2":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"3":{"tf":1.0},"6":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"19":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":2,"docs":{"12":{"tf":1.0},"2":{"tf":1.0}},"l":{"a":{"b":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{":":{":":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"t":{":":{":":{"df":0,"docs":{},"{":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":20,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.7320508075688772},"33":{"tf":2.23606797749979},"34":{"tf":1.7320508075688772},"35":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"x":{"df":1,"docs":{"15":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":22,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":2.23606797749979},"13":{"tf":1.7320508075688772},"14":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":2.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"30":{"tf":2.23606797749979},"32":{"tf":1.0},"35":{"tf":2.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.0}},"|":{"9":{"df":1,"docs":{"35":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"28":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":5,"docs":{"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"30":{"tf":1.0},"33":{"tf":1.0},"35":{"tf":1.0}}}},"w":{"df":1,"docs":{"22":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"v":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}}}},"t":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"3":{"tf":1.0}}}},"t":{"df":4,"docs":{"16":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"35":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"30":{"tf":1.0},"9":{"tf":1.0}}}}}},"y":{"df":3,"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"34":{"tf":1.0},"8":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}},"r":{"df":0,"docs":{},"l":{"df":3,"docs":{"22":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":2.0}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"28":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{}}},"u":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"u":{"b":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":5,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"9":{"tf":1.0}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}},"m":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"12":{"tf":1.0},"26":{"tf":1.0}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":4,"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"33":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"15":{"tf":1.0}}}}}}}},"t":{"(":{"df":0,"docs":{},"z":{"df":1,"docs":{"10":{"tf":1.0}}}},"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"28":{"tf":1.0},"32":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":4,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"|":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"|":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"30":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"27":{"tf":1.0},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"28":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}},"k":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":22,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":2.449489742783178},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":4,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.4142135623730951},"33":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":4,"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"35":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":9,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":6,"docs":{"10":{"tf":2.6457513110645907},"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"19":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"30":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"12":{"tf":1.0},"31":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"35":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"p":{"df":4,"docs":{"13":{"tf":1.4142135623730951},"22":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.0}}}}}},"s":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"15":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"26":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"u":{"df":11,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.7320508075688772},"33":{"tf":1.0},"6":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"<":{"df":0,"docs":{},"i":{"6":{"4":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":3,"docs":{"36":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"i":{"a":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"4":{"tf":1.0}}}},"y":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.7320508075688772}}}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":3,"docs":{"27":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}},"df":1,"docs":{"31":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{},"k":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"28":{"tf":1.0}},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"10":{"tf":1.0},"31":{"tf":1.0}}}}}}},"x":{"/":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"x":{")":{")":{"^":{"df":0,"docs":{},"j":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":2,"docs":{"26":{"tf":1.0},"33":{"tf":1.0}}},"^":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":9,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.7320508075688772},"26":{"tf":1.7320508075688772},"27":{"tf":1.7320508075688772},"28":{"tf":1.0},"29":{"tf":1.0},"33":{"tf":1.0},"35":{"tf":2.0}},"²":{"/":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"x":{"df":2,"docs":{"26":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"y":{"df":1,"docs":{"18":{"tf":1.0}}},"z":{"df":5,"docs":{"10":{"tf":2.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.0},"28":{"tf":1.0}},"ⁿ":{"]":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"breadcrumbs":{"root":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"a":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":4,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":6,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"z":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":4,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"18":{"tf":1.0}},"i":{"df":4,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.0}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":6,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":5,"docs":{"18":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"v":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":5,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"s":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":3,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}},"z":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":4,"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":7,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"o":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"13":{"tf":1.0},"30":{"tf":1.0},"36":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"title":{"root":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"a":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"19":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"z":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"18":{"tf":1.0}},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"19":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.0}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"35":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"21":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":2,"docs":{"18":{"tf":1.0},"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"27":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"s":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}},"z":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"o":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"13":{"tf":1.0},"30":{"tf":1.0},"36":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));