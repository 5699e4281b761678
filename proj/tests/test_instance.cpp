#include <gtest/gtest.h>

#include <random>

#include <warpbench/errors.hpp>
#include <warpbench/instance.hpp>

using namespace warpbench;

namespace {

const ProblemId zdt1{Suite::zdt, 1, 2};

} // namespace

TEST(Instance, NeutralComposition)
{
    const ProblemInstance inst(zdt1, TransformSpec::identity(), TransformSpec::identity());
    const auto rec = evaluate_instance(inst, Point::Zero(2), 1);
    EXPECT_EQ(rec.f_original, Objectives(0, 1));
    EXPECT_EQ(rec.f_seen, rec.f_original);
    EXPECT_EQ(rec.eval_index, 1);
}

TEST(Instance, SearchWarpComposesWithProblem)
{
    const ProblemInstance inst(zdt1, TransformSpec::beta_cdf(2, 1), TransformSpec::identity());
    const auto rec = evaluate_instance(inst, Point::Constant(2, 0.5), 7);
    const double g = 1 + 9 * 0.25;
    EXPECT_NEAR(rec.f_original[0], 0.25, 1e-15);
    EXPECT_NEAR(rec.f_original[1], g * (1 - std::sqrt(0.25 / g)), 1e-12);
    EXPECT_NEAR(rec.f_original[1], 2.34861, 1e-5);
    EXPECT_EQ(rec.x_seen, Point::Constant(2, 0.5));
}

TEST(Instance, ObjectiveWarp)
{
    const auto t = TransformSpec::beta_cdf(1, 2);
    EXPECT_TRUE(warp_objectives(t, Objectives(0.5, 0.5)).isApprox(Objectives(0.75, 0.75), 1e-15));
    EXPECT_EQ(warp_objectives(TransformSpec::identity(), Objectives(0.3, 7.2)), Objectives(0.3, 7.2));
    EXPECT_EQ(warp_objectives(t, Objectives(0.5, 2.0))[1], 2.0);
    EXPECT_NEAR(warp_objectives(t, Objectives(0.5, 2.0))[0], 0.75, 1e-15);
    EXPECT_EQ(warp_objectives(TransformSpec::beta_cdf(2, 1), Objectives(1.0, 0.0)), Objectives(1.0, 0.0));
    EXPECT_EQ(warp_objectives(t, Objectives(-0.5, 1.5)), Objectives(-0.5, 1.5));

    EXPECT_NEAR(unwarp_objectives(t, Objectives(0.75, 2.0))[0], 0.5, 1e-15);
    EXPECT_EQ(unwarp_objectives(t, Objectives(0.75, 2.0))[1], 2.0);
    EXPECT_THROW(warp_objectives(TransformSpec::sphered_rotation_angle(1), Objectives(0.5, 0.5)), parameter_error);
}

TEST(Instance, ObjectiveWarpKeepsOriginal)
{
    const ProblemInstance inst(zdt1, TransformSpec::identity(), TransformSpec::beta_cdf(1, 2));
    Point x(2);
    x << 0.25, 0.0;
    const auto rec = evaluate_instance(inst, x, 1);
    EXPECT_EQ(rec.f_original, evaluate(zdt1, x));
    EXPECT_NEAR(rec.f_seen[0], 1 - 0.75 * 0.75, 1e-15);
    EXPECT_NEAR(rec.f_seen[1], 1 - 0.5 * 0.5, 1e-15);
}

TEST(Instance, ObjectiveWarpRoundtrip)
{
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(-0.5, 1.5);
    const auto t = TransformSpec::beta_cdf(0.5, 2);
    for (int k = 0; k < 1000; ++k) {
        const Objectives f(u(gen), u(gen));
        const Objectives back = unwarp_objectives(t, warp_objectives(t, f));
        for (int i = 0; i < 2; ++i) {
            if (f[i] < 0 || f[i] > 1) EXPECT_EQ(back[i], f[i]);
            else EXPECT_NEAR(back[i], f[i], 1e-9);
        }
    }
}

TEST(Instance, Validation)
{
    EXPECT_THROW(ProblemInstance(zdt1, TransformSpec::identity(), TransformSpec::sphered_rotation_angle(0.3)), parameter_error);
    EXPECT_THROW(
        ProblemInstance(ProblemId{Suite::zdt, 1, 10}, TransformSpec::sphered_rotation_angle(0.3), TransformSpec::identity()),
        shape_error
    );
    const ProblemInstance inst(zdt1, TransformSpec::identity(), TransformSpec::identity());
    EXPECT_THROW(evaluate_instance(inst, Point::Constant(2, 1.5), 1), domain_error);
    EXPECT_THROW(evaluate_instance(inst, Point::Constant(3, 0.5), 1), shape_error);
}

TEST(Instance, Descriptor)
{
    const ProblemInstance inst(
        ProblemId{Suite::dtlz, 1, 2}, TransformSpec::sphered_rotation_seeded(2, 3), TransformSpec::identity()
    );
    EXPECT_EQ(inst.descriptor(), "dtlz1-d2__s:rot-seed3__o:id");
    const ProblemInstance b(zdt1, TransformSpec::identity(), TransformSpec::beta_cdf(0.2, 5));
    EXPECT_EQ(b.descriptor(), "zdt1-d2__s:id__o:beta-a0.2-b5");
}
