#!/usr/bin/env python3
"""Regenerate the bundled wordlists under src/tweetlex/data/.

The vocabulary is expanded from tagged stems plus hand-picked extras,
deduplicated, checked for cross-list conflicts, and written sorted one
token per line (';' header comments), the same plain layout the Hu &
Liu opinion lexicon uses. Run from the repo root after editing the
stem tables:

    python scripts/build_wordlists.py

Stem tags:
    a  adjective: base + -ly adverb        A  adjective, base only
    e  with a/A: also the -ness noun
    v  verb: base, -s, -ed, -ing           d  with v: double final letter
    r  with v: also -er/-ers agent nouns
    n  noun: base + plural                 x  bare token (the default)
"""

from __future__ import annotations

import re
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "tweetlex" / "data"

VOWELS = "aeiou"
TOKEN_RE = re.compile(r"^[a-z][a-z']*$")


def adverb(stem: str) -> str:
    if stem.endswith("y") and len(stem) > 2 and stem[-2] not in VOWELS:
        return stem[:-1] + "ily"
    if stem.endswith("ic"):
        return stem + "ally"
    if stem.endswith("le") and len(stem) > 2 and stem[-3] not in VOWELS:
        return stem[:-1] + "y"
    if stem.endswith("ll"):
        return stem + "y"
    return stem + "ly"


def ness(stem: str) -> str:
    if stem.endswith("y") and len(stem) > 2 and stem[-2] not in VOWELS:
        return stem[:-1] + "iness"
    return stem + "ness"


def plural(stem: str) -> str:
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        return stem + "es"
    if stem.endswith("y") and len(stem) > 1 and stem[-2] not in VOWELS:
        return stem[:-1] + "ies"
    if stem.endswith("o") and len(stem) > 1 and stem[-2] not in VOWELS:
        return stem + "es"
    return stem + "s"


def verb_forms(stem: str, double: bool, agent: bool) -> set[str]:
    forms = {stem, plural(stem)}
    if double:
        base = stem + stem[-1]
        forms |= {base + "ed", base + "ing"}
        if agent:
            forms |= {base + "er", base + "ers"}
        return forms
    if stem.endswith("e"):
        forms.add(stem + "d")
        if stem.endswith(("ee", "ye", "oe")):
            forms.add(stem + "ing")
        else:
            forms.add(stem[:-1] + "ing")
        if agent:
            forms |= {stem + "r", stem + "rs"}
        return forms
    if stem.endswith("y") and stem[-2] not in VOWELS:
        forms |= {stem[:-1] + "ied", stem + "ing"}
        if agent:
            forms |= {stem[:-1] + "ier", stem[:-1] + "iers"}
        return forms
    forms |= {stem + "ed", stem + "ing"}
    if agent:
        forms |= {stem + "er", stem + "ers"}
    return forms


def expand(spec: str) -> set[str]:
    words: set[str] = set()
    for entry in spec.split():
        stem, _, tags = entry.partition(":")
        tags = tags or "x"
        if "a" in tags or "A" in tags:
            words.add(stem)
            if "a" in tags:
                words.add(adverb(stem))
            if "e" in tags:
                words.add(ness(stem))
        if "v" in tags:
            words |= verb_forms(stem, double="d" in tags, agent="r" in tags)
        if "n" in tags:
            words |= {stem, plural(stem)}
        if "x" in tags:
            words.add(stem)
    return words


# --- positive vocabulary -------------------------------------------------

POSITIVE_STEMS = """
able:a abundant:a accurate:a adept:a admirable:a adorable:a adventurous:a
affable:a affectionate:a affordable:a agile:a agreeable:a altruistic:a
ambitious:a amiable:a ample:a angelic:a appreciative:a apt:a articulate:a
artistic:a astute:a attentive:a attractive:a authentic:a auspicious:a
awesome:a balanced:x beautiful:a beneficial:a benevolent:a blissful:a
bold:ae bountiful:a brave:a breathtaking:A bright:ae brilliant:a brisk:a
bubbly:A buoyant:a calm:ave capable:a carefree:A celebratory:A
charismatic:a charitable:a cheerful:ae cheery:A chic:A chivalrous:a
civil:a classy:A clean:a clear:a clever:ae comfortable:a commendable:a
compassionate:a competent:a confident:a congenial:a conscientious:a
considerate:a constructive:a content:A convenient:a convivial:a cool:a
cooperative:a cordial:a courageous:a courteous:a cozy:a creative:a
credible:a crisp:a cuddly:A cute:Ae dandy:A dapper:A darling:A dashing:A
dazzling:x dear:A decent:a delectable:a delicious:a delightful:a
dependable:a deserving:x desirable:a devoted:x dignified:x diligent:a
diplomatic:a distinguished:x divine:a dreamy:A durable:A dutiful:a
dynamic:a eager:a earnest:ae easy:a easygoing:A ebullient:a economical:a
ecstatic:a educated:x effective:ae efficient:a effortless:a effervescent:A
elated:x elegant:a elite:A eloquent:a eminent:a empathetic:a
energetic:a engaging:x enjoyable:a enterprising:x enthusiastic:a enviable:a
epic:A equitable:a ethical:a euphoric:a evenhanded:A exalted:x exemplary:A
exceptional:a exquisite:a extraordinary:a exuberant:a fab:A fabulous:a
fair:ae faithful:ae famous:a fancy:A fantastic:a fashionable:a faultless:a
favorable:a fearless:ae fertile:A fervent:a festive:a fine:a finest:x fit:A
flattering:x flavorful:A flawless:a flexible:a fluent:a fond:ae foolproof:A
fortuitous:a fortunate:a fragrant:a free:a fresh:ae friendly:Ae fruitful:a
fulfilling:x fun:x funny:A gallant:a generous:a gentle:ae genuine:a
gifted:x glad:ae glamorous:a gleeful:a glorious:a glowing:x golden:A
good:Ae gorgeous:a graceful:a gracious:a grand:a grateful:ae great:ae
gutsy:A handsome:a handy:A happy:ae hardy:A harmonious:a healthy:a
heartfelt:A heartwarming:A heavenly:A helpful:ae heroic:a hilarious:a
honest:a honorable:a hopeful:a hospitable:a humane:a humble:a humorous:a
ideal:a idyllic:a illustrious:a imaginative:a immaculate:a impartial:a
impeccable:a impressive:a incredible:a industrious:a ingenious:a
innocent:a innovative:a insightful:a inspirational:a instructive:a
intelligent:a intuitive:a inventive:a interesting:x inviting:x
irresistible:a jolly:A jovial:a joyful:ae joyous:a jubilant:a keen:ae
kind:ae kindhearted:A knowledgeable:a laudable:a lavish:av lawful:a
legendary:A legitimate:a likable:A likeable:A lively:Ae lovable:A
lovely:Ae loyal:a lucid:a lucky:a luminous:a lush:A luxurious:a magical:a
magnificent:a majestic:a marvelous:a marvellous:a masterful:a mature:a
meaningful:a memorable:a merciful:a merry:a meticulous:a mighty:a
miraculous:a modest:a momentous:a motivated:x neat:ae nice:ae nifty:A
nimble:a noble:a notable:a noteworthy:A nourishing:x nurturing:x optimal:a
optimistic:a orderly:A organized:x outstanding:a passionate:a patient:a
peaceful:ae peppy:A perfect:a personable:A persuasive:a phenomenal:a
playful:ae pleasant:ae pleasing:x pleasurable:a plentiful:a plush:A
poetic:a poised:x polished:x polite:ae popular:a positive:a powerful:a
practical:a praiseworthy:A precious:A precise:a premier:A premium:A
prestigious:a pretty:a priceless:A pristine:A productive:a proficient:a
progressive:a prominent:a prompt:a prosperous:a proud:a prudent:a
punctual:a pure:a quaint:a qualified:x quick:ae radiant:a rapturous:a
reasonable:a refined:x regal:a reliable:a remarkable:a resilient:a
resourceful:a respectable:a respectful:a responsive:a restful:a reverent:a
rich:ae righteous:a robust:a romantic:a rosy:A safe:a satisfactory:a
savory:A savvy:A scrumptious:a seamless:a secure:a selfless:ae
sensational:a sensible:a serene:a sharp:a shiny:A sincere:a skilled:x
skillful:a sleek:a slick:a smart:a smooth:ae snappy:A sociable:A solid:a
soothing:x sophisticated:x spacious:a sparkling:x spectacular:a speedy:a
spirited:x splendid:a spotless:a stable:A steadfast:ae steady:a stellar:A
stimulating:x strong:a stunning:x stupendous:a sturdy:a stylish:a
sublime:a succinct:a successful:a succulent:a sunny:A superb:a superior:A
supportive:a supreme:a sweet:ae swift:a sympathetic:a tasteful:a tasty:A
tender:ae terrific:a thankful:ae thoughtful:ae thrifty:A thriving:x tidy:a
timeless:A tolerant:a tranquil:a transparent:a tremendous:a triumphant:a
trustworthy:A trusty:A truthful:ae unbeatable:A unbiased:A unforgettable:a
upbeat:A useful:ae valiant:a valuable:A versatile:a vibrant:a victorious:a
vigilant:a vigorous:a virtuous:a vivacious:a vivid:a warm:a welcoming:x
wholesome:A willing:a winsome:A wise:a witty:A wonderful:a wondrous:a
worthwhile:A worthy:A youthful:a zealous:a zesty:A

accomplish:v achieve:vr admire:vr adore:v amaze:v amuse:v applaud:v
appreciate:v assure:v astonish:v astound:v attract:v beautify:v benefit:vn
bless:v boost:v brighten:v captivate:v caress:v celebrate:v charm:vn
cheer:v cherish:v comfort:vn commend:v compliment:vn congratulate:v
dazzle:v delight:vn dignify:v elate:v elevate:v empower:v enchant:v
encourage:v endear:v endorse:v energize:v enhance:v enjoy:v enlighten:v
enliven:v enrich:v entertain:vr enthuse:v excel:vd excite:v exhilarate:v
fascinate:v favor:vn flatter:v flourish:v forgive:v fulfill:v gladden:v
glorify:v glow:vn gratify:v grin:vd heal:vr help:vr honor:vn hope:vn
impress:v improve:v indulge:v inspire:v invigorate:v laud:v laugh:vn
liberate:v lighten:v like:v love:v mesmerize:v motivate:v nourish:v
nurture:v overjoy:v pamper:v perfect:v please:v praise:vn prevail:v
prosper:v protect:vr purify:v reassure:v recommend:v redeem:v refresh:v
rejoice:v rejuvenate:v relieve:v relish:v remedy:vn renew:v rescue:vr
respect:vn restore:v revere:v revitalize:v revive:v reward:vn salute:v
satisfy:v savor:v shine:v simplify:v smile:vn soothe:v sparkle:v
stabilize:v strengthen:v succeed:v surpass:v thank:v thrill:vn thrive:v
treasure:vn triumph:vn trust:vn uplift:v venerate:v welcome:v wow:v

accolade:n achievement:n advantage:n asset:n award:n blessing:n bonus:n
breakthrough:n celebration:n champion:n favorite:n feat:n friendship:n
genius:n gift:n hero:n highlight:n hug:vdn innovation:n joy:n luxury:n
masterpiece:n miracle:n opportunity:n paradise:x passion:n pleasure:n
privilege:n prize:n strength:n success:n talent:n treat:n tribute:n
victory:n virtue:n windfall:n winner:n wonder:n
"""

POSITIVE_EXTRAS = """
abundance admiration affection amazingly amusingly astonishingly
astoundingly beauties beauty best better bliss bravery brilliance
charisma charmingly clarity cleanliness compassion competence confidence
congrats congratulations contented contentedly contentment courage
courtesy creativity credibility dazzlingly decency delicacy devotion
dignity diligence dynamism eagerness ease ecstasy efficiency elation
elegance eloquence empathy enamored encouragement encouragingly
enthusiasm enthusiast enthusiasts esteem esteemed euphoria excellence
excellent excitement exuberance fascination fave favourite fervor finer
flair fortune freedom generosity glee glory goodwill grandeur gratitude
greats harmony heartily heaven heroism honesty honour hooray hospitality
humility humor humour hurrah ingenuity innocence inspiration integrity
intelligence jubilation kudos laughter loveliness loyalty luck luv
magnificence majesty maturity mercy merriment modesty optimism patience
peace perfection plenty popularity positivity precision prestige pride
productivity proficiency prosperity purity radiance rapture reassuringly
refreshingly relief reliability resilience safety satisfaction serenity
sincerity smartest smiley soothingly sophistication splendor splendour
stability stamina stoked stunningly sunshine superiority sweetheart
sympathy thanks thx tolerance tranquility truly usefully vitality vigor
versatility warmth wealth wellness willingness wisdom wit woohoo worth
won yay yummy zeal zest
"""

POSITIVE_STEMS_2 = """
amicable:a appealing:x appetizing:A ardent:a aromatic:A avid:A beaming:x
beloved:x benign:A blooming:x brainy:A breezy:A candid:a catchy:A
classic:A coherent:a colorful:A comfy:A compelling:x complimentary:A
concise:a consistent:a convincing:x creamy:A crispy:A cultured:A
daring:x decisive:a dedicated:x deft:a engrossing:x enthralling:x
erudite:A expert:an expressive:a famed:A foremost:A forthright:A frank:a
frugal:a gainful:a genial:a gleaming:x glistening:x glittering:x
goodhearted:A gripping:x groovy:A happier:x happiest:x hardworking:A
harmless:A healthful:A hygienic:A illuminating:x immersive:A immune:A
incomparable:A indispensable:A inexpensive:A informative:A intrepid:a
invaluable:A invincible:A irreplaceable:A jaunty:A judicious:a
lighthearted:A lucrative:A lustrous:A magnanimous:a manageable:A
masterly:A mellow:A melodious:a mindful:A modern:A monumental:A novel:A
opulent:a outgoing:A palatable:A peerless:A perceptive:a perky:A
picturesque:A placid:a plucky:A posh:A principled:A proactive:A
prodigious:a professional:A prolific:A promising:x protective:A
purposeful:A rational:a readable:A renowned:A reputable:A resolute:a
responsible:A revolutionary:A roomy:A saintly:A scenic:A sexy:A
shimmering:x shrewd:a silky:A snazzy:A snug:A soulful:A sparkly:A
spellbinding:A staunch:a sterling:A straightforward:A streamlined:A
striking:x stronger:x strongest:x suave:a sumptuous:a super:A
superlative:A sweetest:x talented:x tenacious:a thorough:A tireless:a
top:A trendy:A unassuming:A uncomplicated:A undaunted:A understanding:x
undisputed:A unfailing:A unlimited:A unmatched:A unparalleled:A
unpretentious:A unrivaled:A unselfish:A unspoiled:A unstoppable:A
unwavering:A upscale:A upstanding:A usable:A venerable:A visionary:An
wealthy:A wholehearted:a workable:A zippy:A

acclaim:vn embrace:v entice:v enthrall:v esteem:vn exalt:v hearten:v
idolize:v illuminate:v innovate:v persevere:v prize:vn recover:v
support:vr upgrade:vn

altruism:x ambition:n amusement:n applause:x appreciation:x aptitude:x
artistry:x aspiration:n attraction:n benefactor:n benevolence:x
bonanza:n boon:n bounty:n camaraderie:x charity:n commendation:n
dedication:x dependability:x dexterity:x empowerment:x enchantment:n
endearment:n endorsement:n enjoyment:x enrichment:x exhilaration:x
expertise:x fame:x finesse:x forgiveness:x fortitude:x gem:n glamour:x
godsend:n grace:x gratification:x gusto:x jackpot:n knack:n lifesaver:n
longevity:x luster:x magic:x marvel:n mastery:x milestone:n mirth:x
nirvana:x nobility:x oasis:x ovation:n panache:x paragon:n pep:x perk:n
pinnacle:n poise:x prodigy:n progress:x protection:x prowess:x rapport:x
reassurance:x recovery:n refuge:n renewal:n renown:x respite:n
reverence:x riches:x romance:n sanctuary:n savior:n solace:x tact:x
teamwork:x tranquillity:x unity:x upside:n utopia:x valor:x virtuoso:n
wellbeing:x whiz:x
"""

POSITIVE_EXTRAS_2 = """
awsome beutiful wonderfull exellent deservedly deserved lovingly awed awe
hurray funnier funniest wins winning
"""

# --- negative vocabulary -------------------------------------------------

NEGATIVE_STEMS = """
abysmal:a appalling:x atrocious:a awful:a bad:a bogus:A botched:x broken:x
cheap:ae chintzy:A clumsy:ae crappy:A creaky:A cruddy:A crummy:A
defective:a deficient:a dilapidated:x dingy:A dirty:A dismal:a dreadful:a
dull:ae dysfunctional:A faulty:A feeble:ae flawed:x flimsy:A fragile:A
ghastly:A grim:ae gross:a grubby:A horrendous:a horrible:a horrid:a
inadequate:a inferior:A insufficient:a junky:A lackluster:A lame:a
lousy:A mediocre:A messy:a nasty:ae pathetic:a pitiful:a poor:a rotten:A
rough:A rusty:A shabby:ae shoddy:a sketchy:A sloppy:ae sluggish:a stale:A
subpar:A substandard:A tacky:A tattered:A terrible:a trashy:A
unacceptable:a unreliable:A unusable:A useless:ae weak:ae worthless:Ae
wretched:a

afraid:A angry:a anguished:x anxious:a apathetic:a ashamed:A bitter:ae
bleak:ae cranky:A crestfallen:A dejected:A desolate:A desperate:a
disgruntled:A distraught:A doleful:a downcast:A dreary:a embittered:x
envious:a fearful:a forlorn:A frantic:a fretful:a furious:a gloomy:ae
glum:A grouchy:A grumpy:a guilty:a heartbroken:A helpless:ae hopeless:ae
hostile:A hysterical:a impatient:a indignant:a insecure:A irate:A
irritable:A jealous:a livid:A lonely:Ae lonesome:A mad:a melancholy:A
miserable:a moody:A morose:a mournful:a nervous:ae panicky:A paranoid:A
pessimistic:a restless:ae sad:ae sorrowful:a sorry:A stressful:A sullen:a
tearful:a tense:A uneasy:ae unhappy:ae weary:ae woeful:a wrathful:A

abrasive:a abusive:a aggressive:a aloof:A arrogant:a barbaric:a
belligerent:a biased:x bossy:A brutal:a callous:a careless:ae childish:a
coldhearted:A conceited:A contemptuous:a cowardly:A crass:A crooked:A
cruel:a cynical:a deceitful:a deceptive:a despicable:a destructive:a
devious:a disgraceful:a dishonest:a disloyal:a disobedient:a
disrespectful:a egotistical:a evil:an foolish:ae fraudulent:a greedy:ae
gullible:A harsh:ae hateful:a haughty:a heartless:ae hypocritical:a
idiotic:A ignorant:a immature:a immoral:a impolite:a inconsiderate:a
incompetent:a indecent:a inept:a infamous:a inhumane:a insane:a
insensitive:a insincere:a insolent:a intolerant:a irresponsible:a lazy:ae
lewd:a malicious:a manipulative:A merciless:a mischievous:a miserly:A
moronic:A narcissistic:A neglectful:a nightmarish:A obnoxious:a
offensive:a oppressive:a petty:Ae pompous:a predatory:A pretentious:a
problematic:A pushy:A reckless:ae remorseless:a rude:ae ruthless:ae
sadistic:a sarcastic:a savage:a scandalous:a selfish:ae senseless:a
shady:A shallow:A shameful:a shameless:a sinister:A sleazy:A sly:A smug:a
snobbish:a spiteful:a stingy:A stubborn:ae stupid:a suspicious:a
tactless:a thoughtless:ae traumatic:A treacherous:a twisted:x
tyrannical:A unethical:a unfair:ae unfaithful:a ungrateful:a unjust:a
unkind:ae unprofessional:a unscrupulous:a untrustworthy:A vain:a
vengeful:a vicious:a vile:A vindictive:a violent:a vulgar:a wicked:ae
witless:A

achy:A alarming:x catastrophic:a contagious:A contaminated:x dangerous:a
deadly:A detrimental:a dire:A disastrous:a diseased:x dizzy:A dreaded:x
fearsome:A feverish:A filthy:A frightening:x hazardous:a ill:Ae
infectious:A inflamed:x injured:x lethal:a nauseating:x nauseous:a
ominous:a painful:a perilous:a precarious:a queasy:A risky:A scary:A
sick:Ae sickly:A sore:A swollen:x threatening:x toxic:A unsafe:A
venomous:a wounded:x

unable:A unattractive:a unbearable:a uncomfortable:a unconvincing:A
undependable:A undesirable:a unfit:A unfortunate:a unforgiving:A
unfriendly:A unhealthy:A unhelpful:A unimpressive:A uninspired:A
unjustified:A unlawful:a unlucky:a unnatural:a unpleasant:ae unpopular:A
unprepared:A unproductive:A unqualified:A unrealistic:A unreasonable:a
unresponsive:A unsanitary:A unsatisfactory:A unsatisfying:A unstable:A
unsuccessful:a unsuitable:A untidy:A untimely:A untrue:A unwanted:A
unwelcome:A unwell:A unwise:a unworthy:A inaccurate:a inappropriate:a
incapable:A incoherent:a inconsistent:a incorrect:a ineffective:a
inefficient:a inexcusable:A inflexible:A inhospitable:A insufferable:A
intolerable:a impractical:A improper:a imprudent:A impure:A
inconvenient:a irrational:a disadvantageous:A disagreeable:A
discourteous:A dishonorable:A disingenuous:A disorganized:A distasteful:A
overbearing:A overblown:A overpriced:A overrated:A oversensitive:A
underhanded:A overhyped:A

abandon:v abduct:v abhor:vd abuse:vr accuse:vr ache:v afflict:v
aggravate:v agonize:v alarm:vn alienate:v anger:vn annihilate:v annoy:v
antagonize:v assault:vn attack:vnr backfire:v backstab:vd bamboozle:v
ban:vd bash:v belittle:v berate:v betray:vr bicker:v blackmail:vr blame:v
blunder:vn boast:v bother:v boycott:v brag:vd breach:v bruise:v bungle:v
burden:vn capsize:v castigate:v censure:v cheat:vr choke:v clash:v
clog:vd collapse:vn collude:v complain:vr condemn:v confuse:v conspire:v
contradict:v corrode:v corrupt:v crash:v cripple:v criticize:v crumble:v
crush:v cry:v curse:vn damage:vn decay:vn deceive:vr decline:vn defame:v
defraud:v degrade:v dehumanize:v demean:v demolish:v demoralize:v
denounce:v deplete:v deplore:v deprive:v deride:v despair:vn despise:v
destroy:vr deteriorate:v detest:v devastate:v disagree:v disappoint:v
discourage:v disgust:vn dishearten:v dislike:vn dismay:vn disobey:v
disparage:v displease:v disrupt:v dissatisfy:v distort:v distress:vn
distrust:vn disturb:v doom:vn doubt:vn downgrade:v drag:vd drain:v
dread:vn drown:v dump:v embarrass:v embezzle:v endanger:v enrage:v
erode:v exacerbate:v exaggerate:v exasperate:v exhaust:v exploit:vr
extort:v fail:v falsify:v falter:v fear:vn flounder:v fluster:v fret:vd
frighten:v frustrate:v fumble:v fuss:v gripe:v groan:vn grumble:v
harass:v harm:vn hate:vnr hinder:v hoard:v horrify:v humiliate:v impair:v
impede:v infest:v infuriate:v injure:v insult:vn interfere:v interrupt:v
intimidate:v irk:v irritate:v jeopardize:v kidnap:vd kill:vr lament:v
languish:v loathe:v loot:vr lurk:v malign:v maul:v menace:vn mislabel:v
mismanage:v misbehave:v misinform:v misjudge:v misrepresent:v mistreat:v
misuse:v moan:vn mock:v molest:v mortify:v mourn:vr mug:vdr murder:vnr
nag:vd neglect:vn obstruct:v offend:vr oppress:v overcharge:v overreact:v
overwhelm:v peeve:v penalize:v persecute:v pester:v petrify:v pillage:v
plague:vn plunder:v poison:vn pollute:vr procrastinate:v provoke:v
punish:v quarrel:vn rant:vn rage:vn ransack:v rebuke:v regret:vd reject:v
reprimand:vn resent:v retaliate:v revile:v ridicule:v rig:vd riot:vnr
rip:vd rob:vdr rot:vd ruin:vn rupture:v sabotage:v scam:vdr scare:v
scar:vdn scoff:v scold:v scorn:vn scowl:vn scream:vn screech:v shatter:v
shun:vd sicken:v sin:vdn slander:vr slap:vd slaughter:vn smash:v smear:vn
smuggle:vr snub:vd sob:vd spam:vd spoil:v squabble:vn squander:v stab:vd
stagger:v stagnate:v stain:vn stalk:vr starve:v stifle:v struggle:vn
stumble:v suffer:vr sulk:v suppress:v swindle:vr tarnish:v taunt:vn
tease:v terrorize:v threaten:v throb:vd thwart:v torment:vn torture:vn
trample:v trap:vd tremble:v trick:vn undermine:v underwhelm:v vandalize:v
vex:v victimize:v vilify:v violate:v vomit:v wail:vn waste:vn weaken:v
whine:vr wither:v worry:v worsen:v wreck:vn wrong:av

abomination:n accusation:n adversary:n adversity:x affliction:n agony:n
ailment:n animosity:x annoyance:n anxiety:x apathy:x arrogance:x
atrocity:n bane:x bankruptcy:x betrayal:n bias:n bigot:n bigotry:x
blight:x bloodshed:x breakdown:n bribe:vn bribery:x bug:n bully:vn
calamity:n cancer:x casualty:n catastrophe:n chaos:x complaint:n
conflict:n confusion:x conspiracy:n contempt:x controversy:n corruption:x
coward:n cowardice:x crime:n criminal:n crisis:x criticism:n cruelty:n
cynic:n cynicism:x deadlock:x death:x debacle:n debt:n deceit:x
deception:n defamation:x defeat:vn defect:n deficiency:n deficit:n
degradation:x delusion:n demise:x denial:x depression:x desperation:x
destruction:x deterioration:x dilemma:n disadvantage:n disappointment:n
disaster:n disbelief:x discomfort:x discouragement:x discrimination:x
disease:n disgrace:vn dishonesty:x disloyalty:x disorder:n dispute:vn
disruption:n dissatisfaction:x distortion:n disturbance:n downfall:x
downturn:n drawback:n drought:n embarrassment:n enemy:n exaggeration:n
exhaustion:x extortion:x failure:n famine:n fatality:n fatigue:x fault:n
feud:vn fever:n fiasco:n filth:x flaw:n foe:n fraud:n fraudster:n
frenzy:x fright:x frustration:n fury:x glitch:n greed:x grief:x
grievance:n grudge:n guilt:x harassment:x hardship:n hatred:x havoc:x
hazard:n heartbreak:n hindrance:n horror:n hostility:n humiliation:n
hypocrisy:x hypocrite:n hysteria:x idiocy:x idiot:n ignorance:x
illness:n imbalance:n immaturity:x immorality:x impatience:x impostor:n
inability:x inaccuracy:n incompetence:x inconsistency:n inconvenience:vn
indecency:x indignation:x indignity:n ineptitude:x inequality:n infamy:x
infection:n inefficiency:x injustice:n insanity:x insecurity:n
insincerity:x insolence:x interference:x intimidation:x intolerance:x
jealousy:x jerk:n junk:x liar:n loser:n loss:n lunatic:n madness:x
malice:x mayhem:x mediocrity:x mess:n misbehavior:x mischief:x
miscommunication:x misconduct:x misery:n misfortune:n mishap:n
misinformation:x mistake:n mistrust:x misunderstanding:n moron:n
nausea:x nightmare:n nonsense:x nuisance:n obstacle:n obstruction:n
oppression:x outrage:vn pain:n pandemonium:x panic:n paranoia:x peril:n
persecution:x pessimism:x pest:n pity:x plight:x pollution:x poverty:x
prejudice:n pretense:x problem:n propaganda:x provocation:x punishment:n
quandary:n rascal:n recession:n rejection:n remorse:x resentment:x
retaliation:x rift:n ripoff:n rivalry:n rumor:n sadist:n sarcasm:x
savagery:x scandal:n scapegoat:n scarcity:x setback:n shame:vn
shortage:n sickness:n slur:n snob:n sorrow:n squalor:x stagnation:x
stigma:x strain:vn stress:vn strife:x suffering:x suppression:x
suspicion:n tantrum:n tension:n terror:x theft:n threat:n thug:n
toxicity:x tragedy:n trauma:n treachery:x trickery:x trouble:vn
turmoil:x tyranny:x tyrant:n uncertainty:x unemployment:x unfairness:x
unrest:x upheaval:n vandal:n vandalism:x vanity:x vengeance:x victim:n
villain:n violation:n violence:x virus:n woe:n wound:vn wrath:x
wreckage:x
"""

NEGATIVE_EXTRAS = """
worse worst lost lose loses losing stole stolen steal steals stealing
fought fight fights fighting broke broken hurt hurts hurting misled
mislead misleads misleading wept weep weeps weeping sank sunk sink sinks
sinking upset upsets upsetting panics panicked panicking lying stink
stinks stinking stank stunk suck sucks sucked sucking sucker suckers
sucky damn damned damnation hell hellish ugh yuck yucky eww ew blah
dissapointed dissapointing dumb dumber dumbest manipulator manipulators
oppressor oppressors tormentor tormentors aggressor aggressors
braggart hurtful hurtfully painfully uncomfortably unbearably
unfortunately miserably regretful regretfully regrettable regrettably
tragically alarmingly frighteningly disturbingly shockingly annoyingly
disappointingly depressingly distressingly horrifyingly terrifyingly
insultingly maddeningly sickeningly agonizingly cruelly mistaken
misunderstood misunderstand misunderstands misunderstanding anguish
forsaken forlornly gloom despondent despondently dismayed crises
contagion slurs smelly stinky rotting fled flee flees fleeing grieving
grieve grieves grieved grievous grievously traumatized traumatize
traumatizes traumatizing outbreak outbreaks plagued infestation
infestations malady maladies pains pained aching ached aches
heartbreaking heartbreakingly shamefully woefully dolefully morosely
sullenly angrily bitterly gloomily nervously desperately frantically
furiously hopelessly helplessly
"""

NEGATIVE_STEMS_2 = """
abhorrent:a abject:a abnormal:a abominable:a abrupt:a absurd:a adverse:a
aimless:a amiss:A antiquated:A antisocial:A apprehensive:a arduous:a
asinine:A awkward:ae backward:A banal:a bland:a blatant:a bloated:x
bloody:A bloodthirsty:A blurry:A bombastic:A boorish:a bothersome:A
brittle:A bulky:A bumpy:A burdensome:A calamitous:a cancerous:A caustic:a
chaotic:a cheerless:A cheesy:A chilling:x chronic:a clammy:A clueless:A
coarse:a combative:A contentious:a corrosive:A costly:A
counterproductive:A crazed:x crazy:A creepy:A cumbersome:A cutthroat:A
daunting:x dazed:x decrepit:A defamatory:A deformed:x defunct:A demonic:A
deplorable:a depraved:x derelict:A derogatory:A despondent:a devilish:A
diabolical:a difficult:A dim:a dismissive:A disorderly:A disquieting:x
distrustful:A dodgy:A dour:A downhearted:A draconian:A drab:A dubious:a
egregious:a eerie:A erratic:a erroneous:a evasive:a excessive:a
excruciating:x fake:Av fallacious:A false:a fanatical:A farcical:A
fatal:a faithless:A feckless:A ferocious:a fickle:A fiendish:a flagrant:a
flaky:A foolhardy:A foreboding:x forgetful:A foul:Av fractious:A frail:A
frigid:A frivolous:a fruitless:a fussy:A futile:A gaudy:A gimmicky:A
glib:A gory:A graceless:A grating:x greasy:A grimy:A grisly:A gruesome:a
gruff:A grueling:x grungy:A halfhearted:a haphazard:a hapless:A
harmful:a harrowing:x hectic:A heinous:a hideous:a horrific:a hotheaded:A
humdrum:A icky:A ignoble:A illegal:a illegitimate:a illicit:a illogical:a
imperfect:a implausible:A impossible:A impotent:A impoverished:x
imprecise:A inaccessible:A inadvisable:A inane:a inattentive:A
inaudible:A incessant:a incomprehensible:A incorrigible:A indecisive:A
indefensible:A indifferent:a ineffectual:a infantile:A infernal:A
infirm:A inflammatory:A inhuman:A injurious:A insidious:a insignificant:A
insipid:A insurmountable:A intrusive:a invasive:A irksome:A
irredeemable:A irreparable:A jaded:x jarring:x jittery:A joyless:A
jumpy:A kaput:A lackadaisical:A lamentable:a laughable:a lawless:A
leaky:A lethargic:A lifeless:A limp:A listless:A loathsome:A loud:a
loveless:A luckless:A ludicrous:a lukewarm:A lumpy:A lurid:A malevolent:a
malignant:A maniacal:A meager:A melodramatic:A mindless:a mirthless:A
misguided:A moldy:A monotonous:a monstrous:a morbid:a mouldy:A murky:A
naive:a nefarious:a negligent:a neurotic:A nosy:A notorious:a noxious:A
numb:A objectionable:A oblivious:A obscene:a obsolete:A obstinate:a
odious:A onerous:A ornery:A outdated:A overwrought:A paltry:A peevish:a
perfunctory:A pernicious:a perverse:a pesky:A phony:A picky:A pitiable:A
pitiless:A pointless:a poisonous:A powerless:A preposterous:a pricey:A
puny:A questionable:A rabid:A ragged:A rancid:A rash:a redundant:A
repellent:A reprehensible:a repressive:A repugnant:a repulsive:a
revolting:x rickety:A ridiculous:a rowdy:A rubbish:x rundown:A ruinous:A
sanctimonious:A scant:A scanty:A scathing:x scummy:A seedy:A shaky:A
shifty:A shortsighted:A shrill:A silly:A simplistic:A sinful:a
skeptical:a slanderous:A sleepless:A slimy:A slow:A sneaky:A snide:A
snobby:A somber:a sordid:A sorely:x soulless:A spineless:A spotty:A
spurious:A squalid:A stagnant:A stiff:A stilted:A stuffy:A sulky:A
superficial:a surly:A tardy:A tasteless:a tawdry:A tedious:a
temperamental:A tepid:A testy:A thankless:A thorny:A threadbare:A
tiresome:A tiring:x torturous:A touchy:A tragic:a trite:A troublesome:A
tumultuous:a turbulent:a ugly:Ae unappealing:A unappetizing:A uncaring:A
uncivil:A unclean:A unclear:A uncooperative:A uncouth:A undignified:A
uneven:A unflattering:A unfounded:A unfulfilled:A ungainly:A unhygienic:A
unimaginative:A uninspiring:A uninteresting:A unkempt:A unlivable:A
unmanageable:A unoriginal:A unpalatable:A unruly:A unsettling:x
unsightly:A unsound:A unspeakable:A untenable:A untruthful:A
unwarranted:A unwieldy:A uptight:A vacuous:A vague:a vapid:A villainous:A
virulent:A wanton:A wary:A wasteful:a weird:a whiny:A wimpy:A wobbly:A
worrisome:A wrongful:a

agitate:v appall:v badger:v baffle:v belabor:v blur:vd bomb:vn bore:vn
botch:v brawl:vn bristle:v brutalize:v bludgeon:v chastise:v cheapen:v
chide:v coerce:v complicate:v confound:v congest:v connive:v
contaminate:v cramp:vn cringe:v criticise:v cuss:v debase:v debilitate:v
decry:v defile:v degenerate:v delude:v demote:v denigrate:v depress:v
desecrate:v despoil:v destabilize:v deter:vd detract:v devalue:v
diminish:v disapprove:v discredit:v disdain:vn disfigure:v dishonor:vn
disillusion:v disorient:v disown:v distract:v dither:v dwindle:v
encroach:v enslave:v entangle:v entrap:vd evade:v fabricate:v fault:vn
fester:v fib:vdn fizzle:v flinch:v flop:vdn forfeit:v fracture:vn
frown:vn gall:v glare:vn gloat:v gossip:vn gouge:v grimace:v growl:vn
grunt:vn harangue:v haunt:v heckle:vr hijack:vr hiss:v hobble:v
hoodwink:v hound:v ignore:v imperil:v impose:v incriminate:v
indoctrinate:v inflame:v inflict:v insinuate:v instigate:v intrude:vr
invade:vr jeer:v jilt:v lag:vd lambaste:v lash:v libel:vn litter:v maim:v
malfunction:vn maltreat:v mangle:v manipulate:v mar:vd meddle:vr
mishandle:v misplace:v mope:v muddle:v mumble:v mutilate:v nitpick:v
obliterate:v ostracize:v overburden:v overcook:v overcrowd:v overheat:v
oversimplify:v overstate:v overwork:vn paralyze:v patronize:v perish:v
perplex:v pervert:vn pilfer:v pity:vn plummet:v pout:v prowl:vr pummel:v
quibble:vn rankle:v ravage:v rebuff:vn recoil:v reek:v relapse:vn
renege:v repel:vd reproach:vn repulse:v revolt:vn rile:v ruffle:v rust:vn
sadden:v sag:vd scald:v scorch:v scuffle:vn seethe:v shackle:v shirk:v
shiver:v shock:vn shortchange:v shove:v shrivel:v shudder:vn skimp:v
skulk:v slam:vd slash:v slight:v slouch:v smother:v snarl:vn sneer:vn
snitch:vn snoop:v sour:Av spook:v sprain:vn spurn:v squirm:v stammer:v
strangle:v stutter:v subjugate:v suffocate:v sully:v taint:vn tamper:v
tangle:vn terrify:v thrash:v throttle:v tire:v topple:v trash:vn
trespass:vr unnerve:v unsettle:v wane:v warp:v whimper:vn wilt:v wince:v
wobble:v wreak:v writhe:v yell:vn

abduction:n abnormality:n absurdity:n acrimony:x addict:n addiction:n
affront:n aggravation:n agitation:x alienation:x anarchy:x antagonism:x
antagonist:n apprehension:x arson:x assailant:n backlash:n banality:x
bedlam:x blemish:n blister:n boor:n bottleneck:n brute:n burnout:x
carnage:x cataclysm:n chagrin:x clutter:x commotion:n complication:n
confrontation:n contradiction:n crook:n dearth:x dejection:x delay:vn
demon:n deprivation:x despot:n devastation:x devil:n diatribe:n
dictator:n difficulty:n disapproval:x discord:x disillusionment:x
displeasure:x disservice:n distraction:n doldrums:x downside:n
drudgery:x dud:n dysfunction:n emergency:n enmity:x epidemic:n error:n
eyesore:n fallacy:n falsehood:n fanatic:n farce:n fiend:n forgery:n
frailty:x friction:x futility:x gaffe:n garbage:x gibberish:x gimmick:n
gridlock:x grime:x guile:x heartache:n hoax:n hooligan:n hostage:n
hubris:x imbecile:n impasse:n impediment:n imperfection:n impurity:n
incivility:x indifference:x indiscretion:n inequity:n infirmity:n
inflammation:x ingrate:n ingratitude:x innuendo:n insomnia:x ire:x
irritant:n lack:vn lemon:n lethargy:x lunacy:x malaise:x malnutrition:x
maniac:n meltdown:n misdeed:n misfit:n misgiving:n misstep:n monotony:x
monster:n monstrosity:n mutilation:x negligence:x notoriety:x obscenity:n
odor:n odour:n offence:n onslaught:n ordeal:n outcast:n overdose:vn
pang:n parasite:n penalty:n perpetrator:n perversion:n pessimist:n
phobia:n pitfall:n plagiarism:x predator:n predicament:n pretence:x
profanity:n pushover:n quack:n quagmire:n qualm:n racket:n rampage:vn
rancor:x ransom:n repression:x reprisal:n revulsion:x rogue:n rubble:x
rut:n saboteur:n scourge:n sham:n shambles:x shortcoming:n skepticism:x
slob:n snag:n sneak:n spite:x stalemate:n stench:n stupor:x tedium:x
tirade:n toxin:n traitor:n travesty:n treason:x trepidation:x
tribulation:n turbulence:x untruth:n uproar:n vendetta:n vermin:x vice:n
villainy:x vitriol:x volatility:x vulture:n weakling:n wimp:n
wrongdoing:n zealot:n
"""

NEGATIVE_EXTRAS_2 = """
argh ouch yikes boo meh bled bleed bleeds bleeding sting stings stinging
stung mistook aweful anoying anoyed terible horible disapointed
disapointing frustated frustating depresed stressfull painfull usless
angrier angriest uglier ugliest nastier nastiest messier messiest dirtier
dirtiest crazier craziest creepier creepiest sadder saddest sicker
sickest weaker weakest poorer poorest harsher harshest crueler cruelest
slower slowest criticised criticises criticising offences dizziness
schemer scheming screwup screwups letdown letdowns shortfall shortfalls
thief thieves molester molesters harasser harassers defrauder defrauders
bungler bunglers hoarder hoarders kidnapper kidnappers pillager pillagers
plunderer plunderers embezzler embezzlers accuser accusers tormenter
trickster tricksters
"""

NEGATIVE_STEMS_3 = """
aggrieved:x ailing:x antagonistic:A averse:A awry:A bankrupt:Av
bedraggled:x befuddled:x bereft:A blameworthy:A brash:A brusque:a
cantankerous:A contrived:x crabby:A cringeworthy:A dastardly:A
delirious:a deranged:x detestable:a dicey:A downtrodden:A exorbitant:a
fatigued:x forgettable:A fraught:A inconsolable:A incurable:A
lopsided:A maddening:x malformed:x miffed:x obtrusive:A outmoded:A
petulant:a prickly:A reluctant:a repetitive:A rueful:a slipshod:A
soggy:A stodgy:A stricken:x treasonous:A undercooked:A unhinged:x
weepy:A disheveled:x damning:x

ail:v begrudge:v bemoan:v besmirch:v bewilder:v bluster:vn bombard:v
chafe:v clobber:v collide:v condescend:v confiscate:v constrict:v
dampen:v deface:v demonize:v derail:v disconcert:v discolor:v
dislocate:v dispossess:v disqualify:v droop:v dupe:v embroil:v
encumber:v enfeeble:v err:v estrange:v excoriate:v fleece:v flog:vd
flout:v flub:vd fray:v fume:v garble:v grovel:v hamper:v implode:v
infringe:v lapse:vn leak:vn leer:v loiter:v miscalculate:v misdiagnose:v
misfire:v mire:v nauseate:v obfuscate:v overshadow:v regress:v repress:v
retch:v scuff:v slump:vn smirk:vn sputter:v stall:v subvert:v swelter:v
trivialize:v trudge:v whitewash:v

angst:x bereavement:x boredom:x bummer:n charlatan:n chore:n collision:n
condescension:x debris:x disrepair:x disrepute:x dolt:n dunce:n
exploitation:x fallout:x freeloader:n grouch:n hogwash:x imposition:x
incoherence:x inferiority:x infraction:n iniquity:n irritability:x
lout:n lowlife:n malfeasance:x malpractice:x miscreant:n muck:x
negativity:x ogre:n outburst:n quackery:x ruckus:x ruffian:n scoundrel:n
slacker:n sloth:x smog:x stupidity:x venom:x wart:n wrongdoer:n
"""

NEGATIVE_EXTRAS_3 = """
rumour rumours rancour odours
"""

POSITIVE_STEMS_3 = """
adoration:x breathtakingly:x brill:A chipper:A chirpy:A exultant:a
gleam:v legend:n matchless:A merrier:x merriest:x nicer:x nicest:x
optimist:n peachy:A prettier:x prettiest:x swell:A tiptop:A
trailblazer:n trendsetter:n twinkle:v unharmed:A unhurt:A unscathed:A
wonderous:A betterment:x luxuriate:v
"""

NEGATIVE_STEMS_4 = """
accost:v belch:v blemish:vn carp:v cower:v crumple:v deflate:v
disbelieve:v disregard:vn ensnare:v evict:v fidget:v hassle:vn jinx:vn
lurch:v mooch:vr pander:v quiver:v rattle:v rue:v sap:vd tyrannize:v
wallow:v wheeze:v agonise:v antagonise:v brutalise:v demonise:v
demoralise:v jeopardise:v ostracise:v paralyse:v patronise:v penalise:v
stigmatise:v stigmatize:v terrorise:v traumatise:v vandalise:v
victimise:v

bumbling:x contemptible:a craven:A confrontational:A doubtful:a
fallible:A fatuous:A frightful:a godawful:A grotesque:a harebrained:A
inglorious:a irreconcilable:A lax:A mangy:A officious:A ponderous:A
querulous:A rancorous:A scornful:a shiftless:A slothful:A stranded:x
tortuous:A truculent:A uncharitable:A unfulfilling:A ungracious:A
unimpressed:x unsavory:A unseemly:A unwatchable:A vexatious:A wayward:A
frazzled:x

altercation:n bombast:x brat:n curmudgeon:n delinquent:n detractor:n
dissension:x furor:x glutton:n gluttony:x goof:vn grump:n hothead:n
misadventure:n miser:n nitwit:n pestilence:x recrimination:n rigmarole:x
simpleton:n stinker:n tiff:n travail:n turncoat:n wretch:n
"""

NEGATIVE_EXTRAS_4 = """
overspend overspends overspending overspent sneakily crappier crappiest
lousier lousiest gloomier gloomiest lonelier loneliest grumpier
grumpiest viler vilest
"""

NEGATORS = """
not no never cannot can't cant won't wont don't dont doesn't doesnt
didn't didnt isn't isnt aren't arent wasn't wasnt weren't werent
wouldn't wouldnt shouldn't shouldnt couldn't couldnt mustn't mustnt
shan't shant needn't neednt mightn't mightnt daren't darent hasn't hasnt
haven't havent hadn't hadnt ain't aint neither nor none nothing nobody
nowhere noone hardly scarcely barely rarely seldom without
"""


def build() -> tuple[set[str], set[str], set[str]]:
    positive = expand(POSITIVE_STEMS + POSITIVE_STEMS_2 + POSITIVE_STEMS_3)
    positive |= set(POSITIVE_EXTRAS.split()) | set(POSITIVE_EXTRAS_2.split())
    negative = expand(
        NEGATIVE_STEMS + NEGATIVE_STEMS_2 + NEGATIVE_STEMS_3 + NEGATIVE_STEMS_4
    )
    negative |= set(NEGATIVE_EXTRAS.split()) | set(NEGATIVE_EXTRAS_2.split())
    negative |= set(NEGATIVE_EXTRAS_3.split()) | set(NEGATIVE_EXTRAS_4.split())
    negators = set(NEGATORS.split())
    return positive, negative, negators


def check(positive: set[str], negative: set[str], negators: set[str]) -> None:
    for name, words in (("positive", positive), ("negative", negative),
                        ("negators", negators)):
        bad = sorted(w for w in words if not TOKEN_RE.match(w))
        if bad:
            raise SystemExit(f"{name}: malformed tokens {bad[:10]}")
    overlap = positive & negative
    if overlap:
        raise SystemExit(f"cross-list conflicts: {sorted(overlap)}")
    negator_overlap = negators & (positive | negative)
    if negator_overlap:
        raise SystemExit(f"negators overlap sentiment lists: {sorted(negator_overlap)}")
    for word in ("good", "great", "happy"):
        assert word in positive, word
    for word in ("sad", "bad", "awful"):
        assert word in negative, word
    assert "not" in negators
    for word in ("table", "zzz", "very"):
        assert word not in positive | negative | negators, word
    if not 1900 <= len(positive) <= 2100:
        raise SystemExit(f"positive count {len(positive)} outside [1900, 2100]")
    total = len(positive) + len(negative)
    if not 6500 <= total <= 7500:
        raise SystemExit(f"total count {total} outside [6500, 7500]")


def write(name: str, words: set[str], description: str) -> None:
    path = DATA_DIR / name
    header = (
        f"; {description}\n"
        "; one token per line; ';' lines are comments\n"
        "; regenerate with scripts/build_wordlists.py\n"
    )
    path.write_text(header + "\n".join(sorted(words)) + "\n", encoding="utf-8")
    print(f"{path}: {len(words)} tokens")


def main() -> None:
    positive, negative, negators = build()
    check(positive, negative, negators)
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write("positive.txt", positive, "positive sentiment words")
    write("negative.txt", negative, "negative sentiment words")
    write("negators.txt", negators, "negators (reverse terms)")
    print(f"total sentiment words: {len(positive) + len(negative)}")


if __name__ == "__main__":
    main()
