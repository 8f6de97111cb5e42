#include "setcong/rotation.hpp"

namespace setcong {

RotMat RotMat::identity() {
    RotMat m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.a[i][j] = (i == j) ? 1 : 0;
    return m;
}

RotMat matmul(const RotMat& x, const RotMat& y) {
    RotMat out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += x.a[i][k] * y.a[k][j];
            out.a[i][j] = s;
        }
    return out;
}

RotMat transpose(const RotMat& x) {
    RotMat out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.a[i][j] = x.a[j][i];
    return out;
}

Vec3 apply(const RotMat& x, const Vec3& v) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        Rational s = 0;
        for (int k = 0; k < 3; ++k) s += x.a[i][k] * v[k];
        out[i] = s;
    }
    return out;
}

bool is_rotation(const RotMat& x) {
    if (matmul(transpose(x), x) != RotMat::identity()) return false;
    Rational det = 0;
    for (int i = 0; i < 3; ++i)
        det += x.a[0][i] * (x.a[1][(i + 1) % 3] * x.a[2][(i + 2) % 3] -
                            x.a[1][(i + 2) % 3] * x.a[2][(i + 1) % 3]);
    return det == 1;
}

std::pair<RotMat, RotMat> standard_free_rotations() {
    const Rational c(3, 5), s(4, 5);
    RotMat sigma = RotMat::identity();
    sigma.a[0][0] = c;
    sigma.a[0][1] = -s;
    sigma.a[1][0] = s;
    sigma.a[1][1] = c;
    RotMat rho = RotMat::identity();
    rho.a[1][1] = c;
    rho.a[1][2] = -s;
    rho.a[2][1] = s;
    rho.a[2][2] = c;
    return {sigma, rho};
}

RotMat word_to_matrix(const Word& w, const std::vector<RotMat>& gens) {
    if (w.max_generator() > static_cast<int>(gens.size()))
        throw ArityMismatch("word uses a generator with no matrix");
    RotMat out = RotMat::identity();
    for (Letter l : w.letters()) {
        const RotMat& g = gens[std::abs(static_cast<int>(l)) - 1];
        out = matmul(out, l > 0 ? g : transpose(g)); // inverse = transpose
    }
    return out;
}

Vec3 fixed_axis(const RotMat& m) {
    if (m == RotMat::identity()) throw IdentityInput("the identity fixes every axis");
    // Exact elimination on (M - I) v = 0; the kernel of a nonidentity
    // rotation is one-dimensional.
    std::array<std::array<Rational, 3>, 3> a = m.a;
    for (int i = 0; i < 3; ++i) a[i][i] -= 1;

    int pivot_row = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && pivot_row < 3; ++col) {
        int sel = -1;
        for (int row = pivot_row; row < 3; ++row)
            if (a[row][col] != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[pivot_row]);
        Rational p = a[pivot_row][col];
        for (int j = 0; j < 3; ++j) a[pivot_row][j] /= p;
        for (int row = 0; row < 3; ++row) {
            if (row == pivot_row || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (int j = 0; j < 3; ++j) a[row][j] -= f * a[pivot_row][j];
        }
        pivot_col[pivot_row] = col;
        ++pivot_row;
    }
    // Pick the free column and back-substitute.
    std::array<bool, 3> is_pivot{false, false, false};
    for (int i = 0; i < pivot_row; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int col = 0; col < 3; ++col)
        if (!is_pivot[col]) { free_col = col; break; }
    if (free_col < 0) throw Error("rotation matrix has trivial kernel");

    Vec3 v{0, 0, 0};
    v[free_col] = 1;
    for (int i = 0; i < pivot_row; ++i) v[pivot_col[i]] = -a[i][free_col];

    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            for (auto& x : v) x = -x;
        break;
    }
    // Clear denominators for a tidy integer direction vector.
    Integer den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, rat_den(x));
    for (auto& x : v) x *= Rational(den);
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, rat_num(x));
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

bool free_up_to(const std::vector<RotMat>& gens, int radius) {
    const int m = static_cast<int>(gens.size());
    // DFS over reduced words, multiplying incrementally.
    struct Item {
        RotMat mat;
        int last;
        int depth;
    };
    std::vector<Item> stack;
    for (int i = 1; i <= m; ++i)
        for (int sign : {+1, -1}) {
            RotMat g = sign > 0 ? gens[i - 1] : transpose(gens[i - 1]);
            stack.push_back({g, sign * i, 1});
        }
    const RotMat id = RotMat::identity();
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.mat == id) return false;
        if (it.depth == radius) continue;
        for (int i = 1; i <= m; ++i)
            for (int sign : {+1, -1}) {
                int l = sign * i;
                if (l == -it.last) continue;
                RotMat g = sign > 0 ? gens[i - 1] : transpose(gens[i - 1]);
                stack.push_back({matmul(it.mat, g), l, it.depth + 1});
            }
    }
    return true;
}

Rational dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Rational squared_distance(const Vec3& u, const Vec3& v) {
    Vec3 d{u[0] - v[0], u[1] - v[1], u[2] - v[2]};
    return dot(d, d);
}

} // namespace setcong
